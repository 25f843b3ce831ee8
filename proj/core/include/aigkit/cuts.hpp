/*!
  \file cuts.hpp
  \brief k-feasible cut enumeration with cut functions.
*/

#pragma once

#include <aigkit/aig.hpp>
#include <aigkit/truth_table.hpp>

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace aigkit
{

/*! \brief A cut of `root`: sorted leaf ids such that every CI-to-root path crosses a leaf. */
struct cut
{
  std::vector<node_id> leaves;
  node_id root{ 0 };

  bool is_trivial() const { return leaves.size() == 1 && leaves[0] == root; }
  bool operator==( const cut& ) const = default;
};

struct cut_params
{
  /*! \brief Maximum number of leaves (2..8; truth tables need <= 6). */
  std::uint32_t cut_size{ 4 };
  /*! \brief Cuts kept per node, trivial cut included. */
  std::uint32_t max_cuts{ 8 };
  bool compute_truth{ true };
};

/*! \brief Compact cut used by the enumerator. */
struct fast_cut
{
  static constexpr std::uint32_t max_leaves = 8;

  std::array<node_id, max_leaves> leaves{};
  std::uint8_t size{ 0 };
  std::uint64_t signature{ 0 };
  /*! \brief Cut function over 6 variables; leaf i is variable i, higher variables unused. */
  std::uint64_t truth{ 0 };

  std::span<const node_id> leaf_span() const { return { leaves.data(), size }; }
  bool dominates( const fast_cut& other ) const;
  cut to_cut( node_id root ) const;
};

/*! \brief Lazily computes and caches cut sets; entries are dropped when the network changes under them. */
class cut_enumerator
{
public:
  cut_enumerator( const aig& g, cut_params ps );

  const std::vector<fast_cut>& cuts( node_id n );

  /*! \brief Drops cached cuts of `seeds` and their transitive fanout. */
  void invalidate_tfo( std::span<const node_id> seeds );
  void reset();

  const cut_params& params() const { return ps_; }

private:
  void compute( node_id n );

  const aig* g_;
  cut_params ps_;
  std::vector<std::vector<fast_cut>> cache_;
  std::vector<char> valid_;
};

/*! \brief All cut sets of the network, indexed by node id (empty for dead nodes and the constant).

  Each set starts with the trivial cut; the rest are merged fanin cuts with at
  most k leaves, free of duplicates and dominated cuts, ordered by (size,
  leaves) and truncated so the set holds at most max_cuts_per_node cuts.
*/
std::vector<std::vector<cut>> enumerate_cuts( const aig& g, std::uint32_t k, std::uint32_t max_cuts_per_node = 8 );

/*! \brief Function of `root` over `leaves` (ascending id order = variable order), by cone simulation. */
truth_table cone_truth_table( const aig& g, node_id root, std::span<const node_id> leaves );

inline truth_table cut_truth_table( const aig& g, const cut& c )
{
  return cone_truth_table( g, c.root, c.leaves );
}

/*! \brief Stretches a table over `from` leaves to the sorted superset `to` (single-word tables). */
std::uint64_t expand_truth( std::uint64_t truth, std::span<const node_id> from, std::span<const node_id> to );

} // namespace aigkit
