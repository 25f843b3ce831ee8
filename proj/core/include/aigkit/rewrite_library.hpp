/*!
  \file rewrite_library.hpp
  \brief Precomputed small AIG implementations of every NPN class of 4-input functions.
*/

#pragma once

#include <aigkit/npn.hpp>
#include <aigkit/subgraph.hpp>

#include <cstdint>
#include <span>
#include <vector>

namespace aigkit
{

struct rewrite_library_params
{
  /*! \brief Largest structure (in And nodes) considered during enumeration. */
  std::uint32_t node_budget{ 7 };
  /*! \brief Alternative structures kept per class. */
  std::uint32_t max_structures{ 8 };
};

/*! \brief Build statistics. */
struct rewrite_library_stats
{
  std::size_t forest_size{ 0 };
  std::size_t classes_from_enumeration{ 0 };
  std::size_t classes_from_factoring{ 0 };
  double build_seconds{ 0.0 };
};

/*! \brief Maps each of the 222 NPN classes to structures computing its canonical function exactly.

  Structures are over four leaves, leaf i being variable i of the canonical
  table. Enumeration grows a shared forest of And nodes over the four
  variables, keeping for every class only the smallest structures found; a
  class not reached within the budget gets the factored form of its ISOP.
*/
class rewrite_library
{
public:
  explicit rewrite_library( rewrite_library_params ps = {} );

  /*! \brief Library with the default parameters, built once on first use. */
  static const rewrite_library& instance();

  std::span<const subgraph> structures( std::uint16_t canonical ) const;
  std::size_t num_classes() const { return classes_.size(); }
  std::vector<std::uint16_t> keys() const;
  const rewrite_library_stats& build_stats() const { return stats_; }

private:
  std::vector<std::uint16_t> keys_;
  std::vector<std::vector<subgraph>> classes_;  // indexed by npn4 class index
  rewrite_library_stats stats_;
};

} // namespace aigkit
