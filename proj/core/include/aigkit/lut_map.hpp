/*!
  \file lut_map.hpp
  \brief Depth-optimal k-LUT mapping over enumerated cuts, used for dataset labels.
*/

#pragma once

#include <aigkit/aig.hpp>

#include <cstdint>
#include <map>
#include <vector>

namespace aigkit
{

struct lut_mapping
{
  std::size_t lut_count{ 0 };
  std::uint32_t lut_depth{ 0 };
  /*! \brief Chosen cut (sorted leaves) for every LUT root. */
  std::map<node_id, std::vector<node_id>> cover;
};

/*! \brief Maps onto k-input LUTs (2 <= k <= 6).

  arrival(v) = min over non-trivial cuts of 1 + max leaf arrival, with CIs at
  0; ties go to fewer leaves, then the lexicographically smaller leaf set. The
  cover is collected backwards from the COs.
*/
lut_mapping klut_map( const aig& g, std::uint32_t k = 4 );

} // namespace aigkit
