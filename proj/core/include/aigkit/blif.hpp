/*!
  \file blif.hpp
  \brief BLIF subset: .model, .inputs, .outputs, .names, .latch, .end.
*/

#pragma once

#include <aigkit/aig.hpp>

#include <filesystem>
#include <string>
#include <string_view>

namespace aigkit
{

/*! \brief Parses a BLIF model; every cover is strashed into And nodes and inverters. */
aig read_blif( std::string_view text, std::string name = {} );
aig read_blif_file( const std::filesystem::path& path );

/*! \brief One .names per And node, buffers/inverters for outputs, .latch per latch. */
std::string write_blif( const aig& g );
void write_blif_file( const aig& g, const std::filesystem::path& path );

} // namespace aigkit
