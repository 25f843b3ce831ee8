/*!
  \file window.hpp
  \brief Local windows around a node: fanout-free cones, reconvergence-driven cuts, cone simulation.
*/

#pragma once

#include <aigkit/aig.hpp>

#include <array>
#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

namespace aigkit
{

/*! \brief And nodes freed if `root` lost all its fanouts, not crossing `leaves` (root included). */
std::vector<node_id> mffc( const aig& g, node_id root, std::span<const node_id> leaves );

/*! \brief Cut of `root` with at most `max_leaves` leaves, grown by expanding the cheapest leaf. Sorted. */
std::vector<node_id> reconvergence_cut( const aig& g, node_id root, std::uint32_t max_leaves );

/*! \brief And nodes strictly inside the cone of `root` above `leaves`, in topological order (root last). */
std::vector<node_id> cone_nodes( const aig& g, node_id root, std::span<const node_id> leaves );

/*! \brief Exhaustive simulation of a window with at most 8 leaves: 256-bit tables per node. */
class window_simulator
{
public:
  using table = std::array<std::uint64_t, 4>;

  window_simulator( const aig& g, std::span<const node_id> leaves );

  std::uint32_t num_leaves() const { return num_leaves_; }
  /*! \brief Simulates `n` and every node between it and the leaves; n must be covered by the leaves. */
  const table& value( node_id n );
  bool has( node_id n ) const { return values_.count( n ) != 0; }
  /*! \brief Mask of the valid bits (2^num_leaves of them). */
  const table& care() const { return care_; }

private:
  const aig* g_;
  std::uint32_t num_leaves_;
  table care_{};
  std::unordered_map<node_id, table> values_;
};

} // namespace aigkit
