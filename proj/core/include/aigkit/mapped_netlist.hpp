/*!
  \file mapped_netlist.hpp
  \brief Technology-mapped structural Verilog (scalar nets, named-port cell instances).
*/

#pragma once

#include <aigkit/aig.hpp>
#include <aigkit/cell_library.hpp>

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace aigkit
{

struct cell_instance
{
  std::string name;
  std::string cell_name;
  /*! \brief Nets bound to the cell's input pins, in the cell's declared pin order. */
  std::vector<std::string> fanins;
  std::string output;
};

struct mapped_netlist
{
  std::string name;
  std::vector<std::string> inputs;
  std::vector<std::string> outputs;
  std::vector<std::string> wires;
  /*! \brief Instances in topological order (file order among independent instances). */
  std::vector<cell_instance> instances;
};

/*! \brief Parses and validates a netlist against `lib`.

  Errors: parse_error, errc::unknown_cell, errc::multiple_drivers,
  errc::undriven_net, errc::cycle_detected, and errc::unsupported_feature
  for assigns, buses, or instances of multi-output cells.
*/
mapped_netlist read_mapped_verilog( std::string_view text, const cell_library& lib );
mapped_netlist read_mapped_verilog_file( const std::filesystem::path& path, const cell_library& lib );

/*! \brief Strashes every instance's cell function into an AIG with the same ports. */
aig mapped_to_aig( const mapped_netlist& netlist, const cell_library& lib );

/*! \brief True when the text looks like a cell-level netlist (instances, no assign statements). */
bool looks_like_mapped_verilog( std::string_view text );

} // namespace aigkit
