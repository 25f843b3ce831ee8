/*!
  \file augment.hpp
  \brief Seeded per-node sampling of rewrite, refactor and resubstitution.
*/

#pragma once

#include <aigkit/aig.hpp>

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace aigkit
{

/*! \brief Transform codes: 0 none, 1 rewrite, 2 refactor, 3 resubstitution. */
enum class decision : std::uint8_t
{
  none = 0,
  rewrite = 1,
  refactor = 2,
  resub = 3
};

/*! \brief True when the transform would change the graph at `v` under the zero-cost flags; never modifies `g`. */
bool is_transformable( const aig& g, node_id v, decision d, bool zero_rw = false, bool zero_rf = false );

struct aug_config
{
  std::uint64_t seed{ 0 };
  /*! \brief Accept zero-gain rewrites that change structure. */
  bool zero_rw{ false };
  /*! \brief Accept zero-gain refactorings that change structure. */
  bool zero_rf{ false };
  std::optional<std::filesystem::path> log_path;
};

struct decision_record
{
  node_id node{ 0 };
  /*! \brief Codes available at the node, always starting with 0. */
  std::vector<std::uint8_t> available;
  std::uint8_t selected{ 0 };
  std::int64_t gain{ 0 };

  bool operator==( const decision_record& ) const = default;
};

using decision_log = std::vector<decision_record>;

struct aug_result
{
  aig network;
  decision_log log;
};

/*! \brief Visits the And nodes of the initial topological order, skipping nodes removed on the way.

  At each node the available codes are D = [0] followed by every transformable
  code in order 1, 2, 3; one SplitMix64 draw picks D[draw mod |D|], which is
  applied. Writes the decision log to cfg.log_path when set.
*/
aug_result aig_augment( const aig& g, const aug_config& cfg );

/*! \brief CSV with header `node,available,selected,gain`; codes joined by '|'. */
std::string decision_log_csv( const decision_log& log );
void write_decision_log( const decision_log& log, const std::filesystem::path& path );

} // namespace aigkit
