/*!
  \file aiger.hpp
  \brief AIGER reader (ASCII "aag" and binary "aig") and writer.
*/

#pragma once

#include <aigkit/aig.hpp>

#include <filesystem>
#include <string>
#include <string_view>

namespace aigkit
{

enum class aiger_mode
{
  ascii,
  binary
};

/*! \brief Parses AIGER text or bytes; the format is detected from the header. */
aig read_aiger( std::string_view data, std::string name = {} );
aig read_aiger_file( const std::filesystem::path& path );

/*! \brief Serializes the live logic: CIs first, then And nodes in topological order, then the symbol table. */
std::string write_aiger( const aig& g, aiger_mode mode = aiger_mode::ascii );
void write_aiger_file( const aig& g, const std::filesystem::path& path, aiger_mode mode = aiger_mode::ascii );

/*! \brief Whole-file read helper shared by the readers; throws errc::io_error. */
std::string read_text_file( const std::filesystem::path& path );
/*! \brief Writes `content` to a temporary sibling and renames it over `path`; throws errc::io_error. */
void write_file_atomic( const std::filesystem::path& path, std::string_view content );

} // namespace aigkit
