/*!
  \file subgraph.hpp
  \brief Small AIG recipes over numbered leaves, used as replacement candidates.

  A recipe literal is 2*index + complement, where index 0 is constant false,
  indices 1..num_leaves are the leaves, and index num_leaves+1+i is ands[i].
*/

#pragma once

#include <aigkit/aig.hpp>
#include <aigkit/truth_table.hpp>

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace aigkit
{

struct subgraph
{
  std::uint32_t num_leaves{ 0 };
  std::vector<std::array<std::uint32_t, 2>> ands;
  std::uint32_t root{ 0 };

  static constexpr std::uint32_t make_lit( std::uint32_t index, bool complemented )
  {
    return ( index << 1 ) | ( complemented ? 1u : 0u );
  }
  std::uint32_t leaf_lit( std::uint32_t i ) const { return make_lit( i + 1, false ); }
  std::size_t size() const { return ands.size(); }

  /*! \brief Function of the root over the leaves. */
  truth_table simulate() const;
  /*! \brief Depth when every leaf sits at level 0. */
  std::uint32_t depth() const;
  /*! \brief Same recipe with leaf i replaced by leaf perm[i] xor neg bit i, root complemented if requested. */
  subgraph remap_leaves( std::span<const std::uint8_t> perm, std::uint32_t neg_mask, bool out_neg ) const;
  std::string to_string() const;

  bool operator==( const subgraph& ) const = default;
};

/*! \brief Builds recipes with local structural hashing and constant folding. */
class subgraph_builder
{
public:
  explicit subgraph_builder( std::uint32_t num_leaves );

  std::uint32_t leaf( std::uint32_t i ) const { return subgraph::make_lit( i + 1, false ); }
  static constexpr std::uint32_t constant( bool value ) { return value ? 1u : 0u; }

  std::uint32_t make_and( std::uint32_t a, std::uint32_t b );
  std::uint32_t make_or( std::uint32_t a, std::uint32_t b ) { return make_and( a ^ 1u, b ^ 1u ) ^ 1u; }

  /*! \brief Finishes the recipe, keeping only nodes reachable from `root`. */
  subgraph finish( std::uint32_t root ) const;

private:
  std::uint32_t num_leaves_;
  std::vector<std::array<std::uint32_t, 2>> ands_;
  std::unordered_map<std::uint64_t, std::uint32_t> hash_;
};

/*! \brief Outcome of placing a recipe into a network without modifying it. */
struct placement_estimate
{
  /*! \brief False when the recipe would re-use `forbidden` (would create a loop). */
  bool valid{ true };
  /*! \brief Nodes that must be created, plus existing nodes re-used from the freed set. */
  std::uint32_t added{ 0 };
  std::uint32_t root_level{ 0 };
  /*! \brief Root literal when it already exists in the network. */
  std::optional<literal> existing_root;
};

/*! \brief Counts the cost of instantiating `s` over `leaves` using structural-hash lookups only.

  Existing nodes found in `freed` count as added, because they were already
  credited as removed. Stops early once `added` exceeds `max_added`.
*/
placement_estimate estimate_placement( const aig& g, const subgraph& s, std::span<const literal> leaves,
                                       const std::unordered_set<node_id>& freed, node_id forbidden,
                                       std::uint32_t max_added );

/*! \brief Creates the recipe's nodes in the network and returns the root literal. */
literal instantiate( aig& g, const subgraph& s, std::span<const literal> leaves );

} // namespace aigkit
