/*!
  \file edgelist.hpp
  \brief Edgelist export of AIGs and mapped netlists, the matching parser, and node features.

  Line shapes (single spaces, LF endings):
    `<ext> <int> Pi 00`            primary (or latch) input wiring
    `<src> <dst> AIG <ab>`         And in-edge; `ab` is the destination's inverter
                                   embedding (a: fanin0 complemented, b: fanin1)
    `<f1> ... <fn> <dst> <CELL>`   mapped cell instance, fanins in pin order
    `<int> <ext> Po <c0>`          primary (or latch) output; `10` marks a complemented
                                   driver, and source id 0 is the constant node

  Ids: external inputs 1..nCI (PIs, then latch outputs), external outputs
  nCI+1..nCI+nCO (POs, then latch inputs), then internal nodes: CI nodes in
  order, followed by gates in topological order.
*/

#pragma once

#include <aigkit/aig.hpp>
#include <aigkit/cell_library.hpp>
#include <aigkit/mapped_netlist.hpp>

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace aigkit
{

/*! \brief AIG flavor. With keep_names, named PI nodes and PO ports use their names as ids. */
std::string write_edgelist_aig( const aig& g, bool keep_names = false );

/*! \brief Mapped flavor. With keep_names, PI nodes, instances and PO ports use their names as ids. */
std::string write_edgelist_mapped( const mapped_netlist& netlist, bool keep_names = false );

void write_edgelist_file( const std::filesystem::path& path, std::string_view content );

enum class edgelist_flavor
{
  aig,
  mapped
};

struct edgelist_edge
{
  std::string src;
  std::string dst;
};

struct edgelist_graph
{
  edgelist_flavor flavor{ edgelist_flavor::aig };
  std::size_t num_lines{ 0 };
  /*! \brief Distinct ids in first-appearance order. */
  std::vector<std::string> nodes;
  std::vector<edgelist_edge> edges;
  /*! \brief Feature per node (same order as `nodes`): 2 bits for AIG, cell name for mapped gates. */
  std::vector<std::string> features;
  /*! \brief Reconstructed network (AIG flavor only). */
  std::optional<aig> network;
};

/*! \brief Parses an edgelist; throws parse_error or errc::inconsistent_feature. */
edgelist_graph parse_edgelist( std::string_view text );

/*! \brief CSV `node_id,f1,f2`: the And inverter embedding, all-zero rows for CI nodes. */
std::string write_features_aig( const aig& g );

/*! \brief `# vocab: ...` line, then CSV `node_id,f1,...,fK` one-hot over cell names in first-seen order. */
std::string write_features_mapped( const mapped_netlist& netlist );

} // namespace aigkit
