/*!
  \file batch.hpp
  \brief Dataset generation: many verified augmentations of one design, with labels.
*/

#pragma once

#include <aigkit/aig.hpp>

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace aigkit
{

struct label_record
{
  std::size_t sample_id{ 0 };
  std::uint64_t seed{ 0 };
  std::size_t and_count{ 0 };
  std::uint32_t level{ 0 };
  std::size_t lut_count{ 0 };
  std::uint32_t lut_depth{ 0 };

  bool operator==( const label_record& ) const = default;
};

struct batch_params
{
  std::size_t count{ 1 };
  std::uint64_t base_seed{ 0 };
  std::uint32_t lut_size{ 4 };
  /*! \brief Worker threads; 0 picks the hardware concurrency. Output does not depend on it. */
  std::size_t threads{ 1 };
  bool zero_rw{ false };
  bool zero_rf{ false };
};

struct batch_manifest
{
  std::string design;
  std::uint64_t base_seed{ 0 };
  std::vector<label_record> labels;
  std::vector<std::string> files;
};

/*! \brief Writes sample_<i>.el, sample_<i>.features.csv, labels.csv and manifest.json into `out_dir`.

  Sample i uses seed base_seed + i. Every sample is checked for combinational
  equivalence with `g` before anything is written; a failed or inconclusive
  check throws errc::equivalence_failure naming the sample.
*/
batch_manifest batch_generate( const aig& g, const batch_params& ps, const std::filesystem::path& out_dir );

/*! \brief Name of the per-node feature file written next to sample_<i>.el. */
std::string feature_file_name( std::size_t sample_id );

/*! \brief `sample_id,seed,and_count,level,lut_count,lut_depth` rows. */
std::string labels_csv( const std::vector<label_record>& labels );
std::string manifest_json( const batch_manifest& m );

} // namespace aigkit
