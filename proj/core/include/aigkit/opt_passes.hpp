/*!
  \file opt_passes.hpp
  \brief Node-level rewrite, refactor and resubstitution, each split into a check and an application.
*/

#pragma once

#include <aigkit/aig.hpp>
#include <aigkit/cuts.hpp>
#include <aigkit/subgraph.hpp>

#include <cstdint>
#include <optional>
#include <vector>

namespace aigkit
{

struct transform_outcome
{
  bool applied{ false };
  /*! \brief Live And nodes removed by the change. */
  std::int64_t gain{ 0 };
  bool structural_change{ false };
};

/*! \brief A replacement of `root` by `structure` placed over `leaves`, computed on network `version`. */
struct replacement_candidate
{
  node_id root{ 0 };
  std::vector<literal> leaves;
  subgraph structure;
  std::int64_t gain{ 0 };
  std::uint32_t level{ 0 };
  std::uint64_t version{ 0 };
};

/*! \brief Best library replacement over the 4-feasible cuts of `v`.

  Gain is the size of v's fanout-free cone above the cut minus the nodes the
  structure adds after structural-hash sharing. Candidates that would raise
  v's level are skipped. Returns a candidate with positive gain, or with zero
  gain when `zero_cost` is set; nullopt otherwise. Ties go to the smaller
  level, then the lexicographically smaller leaf set.
*/
std::optional<replacement_candidate> rewrite_check( const aig& g, node_id v, bool zero_cost,
                                                    cut_enumerator* cuts = nullptr );

/*! \brief Factored form of the function of a reconvergence-driven cut (up to 8 leaves) of `v`. */
std::optional<replacement_candidate> refactor_check( const aig& g, node_id v, bool zero_cost );

/*! \brief 0-resubstitution or 1-resubstitution of `v` by divisors of its window. */
std::optional<replacement_candidate> resub_check( const aig& g, node_id v );

/*! \brief Applies a candidate; throws errc::stale_candidate when the network changed since the check. */
transform_outcome apply_candidate( aig& g, const replacement_candidate& c );

transform_outcome rewrite_node( aig& g, node_id v, bool zero_cost );
transform_outcome refactor_node( aig& g, node_id v, bool zero_cost );
transform_outcome resub_node( aig& g, node_id v );

struct pass_stats
{
  std::size_t applied{ 0 };
  std::int64_t gain{ 0 };
};

/*! \brief Runs one kind of transform over every node once, in topological order. */
pass_stats rewrite_pass( aig& g, bool zero_cost = false );
pass_stats refactor_pass( aig& g, bool zero_cost = false );
pass_stats resub_pass( aig& g );

/*! \brief Window parameters. */
inline constexpr std::uint32_t refactor_cut_size = 8;
inline constexpr std::uint32_t resub_cut_size = 8;
inline constexpr std::size_t resub_max_divisors = 64;

} // namespace aigkit
