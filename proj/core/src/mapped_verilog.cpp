#include <aigkit/aiger.hpp>
#include <aigkit/errors.hpp>
#include <aigkit/mapped_netlist.hpp>

#include "verilog_lexer.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <unordered_map>
#include <unordered_set>

namespace aigkit
{

using detail::vcursor;
using detail::vtoken;

namespace
{

struct raw_instance
{
  cell_instance inst;
  std::size_t line{ 0 };
};

} // namespace

mapped_netlist read_mapped_verilog( std::string_view text, const cell_library& lib )
{
  vcursor cur( detail::lex_verilog( text ) );
  mapped_netlist nl;
  cur.expect( "module" );
  nl.name = cur.identifier();
  std::vector<std::string> header_ports;
  if ( cur.accept( "(" ) )
  {
    if ( !cur.accept( ")" ) )
    {
      do
        header_ports.push_back( cur.identifier() );
      while ( cur.accept( "," ) );
      cur.expect( ")" );
    }
  }
  cur.expect( ";" );

  enum class net_kind
  {
    input,
    output,
    wire
  };
  std::map<std::string, net_kind> declared;
  std::vector<raw_instance> raw;
  std::size_t multi_output = 0;
  std::string multi_example;

  while ( true )
  {
    const auto& t = cur.peek();
    if ( t.type == vtoken::kind::end )
      throw parse_error( t.line, "missing 'endmodule'" );
    if ( cur.accept( "endmodule" ) )
      break;
    if ( t.text == "input" || t.text == "output" || t.text == "wire" )
    {
      const auto kw = cur.next().text;
      if ( cur.peek().text == "[" )
        throw error( errc::unsupported_feature, "line " + std::to_string( cur.peek().line ) + ": bus declarations are not supported in mapped netlists" );
      const auto k = kw == "input" ? net_kind::input : kw == "output" ? net_kind::output : net_kind::wire;
      do
      {
        const auto line = cur.peek().line;
        const auto name = cur.identifier();
        if ( declared.count( name ) )
          throw parse_error( line, "net '" + name + "' declared twice" );
        declared[name] = k;
        ( k == net_kind::input ? nl.inputs : k == net_kind::output ? nl.outputs : nl.wires ).push_back( name );
      } while ( cur.accept( "," ) );
      cur.expect( ";" );
      continue;
    }
    if ( t.text == "assign" || t.text == "always" || t.text == "initial" || t.text == "reg" )
      throw error( errc::unsupported_feature, "line " + std::to_string( t.line ) + ": '" + t.text + "' is not supported in mapped netlists" );

    // cell instance: CELL NAME ( .PIN(net), ... );
    const auto line = t.line;
    const auto cell_name = cur.identifier();
    raw_instance ri;
    ri.line = line;
    ri.inst.cell_name = cell_name;
    ri.inst.name = cur.identifier();
    const auto* c = lib.find( cell_name );
    if ( !c )
      throw error( errc::unknown_cell, "line " + std::to_string( line ) + ": unknown cell '" + cell_name + "'" );
    if ( c->is_multi_output() )
    {
      ++multi_output;
      if ( multi_example.empty() )
        multi_example = cell_name;
    }
    std::map<std::string, std::string> bind;
    cur.expect( "(" );
    if ( !cur.accept( ")" ) )
    {
      do
      {
        if ( cur.peek().text != "." )
          throw error( errc::unsupported_feature, "line " + std::to_string( cur.peek().line ) + ": only named port connections are supported" );
        cur.expect( "." );
        const auto pin = cur.identifier();
        cur.expect( "(" );
        const auto net_line = cur.peek().line;
        const auto net = cur.identifier();
        if ( cur.peek().text == "[" )
          throw error( errc::unsupported_feature, "line " + std::to_string( net_line ) + ": bit-selects are not supported" );
        cur.expect( ")" );
        if ( bind.count( pin ) )
          throw parse_error( net_line, "pin '" + pin + "' connected twice" );
        if ( !declared.count( net ) )
          throw parse_error( net_line, "net '" + net + "' is not declared" );
        bind[pin] = net;
      } while ( cur.accept( "," ) );
      cur.expect( ")" );
    }
    cur.expect( ";" );
    if ( c->is_multi_output() )
      continue;
    for ( const auto& [pin, net] : bind )
    {
      if ( std::find( c->inputs.begin(), c->inputs.end(), pin ) == c->inputs.end() && pin != c->output() )
        throw parse_error( line, "cell '" + cell_name + "' has no pin '" + pin + "'" );
    }
    for ( const auto& pin : c->inputs )
    {
      auto it = bind.find( pin );
      if ( it == bind.end() )
        throw error( errc::undriven_net, "line " + std::to_string( line ) + ": input pin '" + pin + "' of instance '" +
                                             ri.inst.name + "' is not connected" );
      ri.inst.fanins.push_back( it->second );
    }
    auto out = bind.find( c->output() );
    if ( out == bind.end() )
      throw parse_error( line, "output pin of instance '" + ri.inst.name + "' is not connected" );
    ri.inst.output = out->second;
    raw.push_back( std::move( ri ) );
  }
  if ( multi_output > 0 )
    throw error( errc::unsupported_feature, "Detected " + std::to_string( multi_output ) +
                                                " multi-output gates (for example, \"" + multi_example + "\")" );
  for ( const auto& p : header_ports )
  {
    auto it = declared.find( p );
    if ( it == declared.end() || it->second == net_kind::wire )
      throw parse_error( 1, "port '" + p + "' has no input/output declaration" );
  }

  // drivers
  std::unordered_map<std::string, std::size_t> driver;  // net -> instance index
  for ( std::size_t i = 0; i < raw.size(); ++i )
  {
    const auto& net = raw[i].inst.output;
    if ( declared.at( net ) == net_kind::input )
      throw error( errc::multiple_drivers, "line " + std::to_string( raw[i].line ) + ": net '" + net +
                                               "' is a primary input and is also driven by '" + raw[i].inst.name + "'" );
    if ( driver.count( net ) )
      throw error( errc::multiple_drivers, "line " + std::to_string( raw[i].line ) + ": net '" + net +
                                               "' is driven by '" + raw[driver[net]].inst.name + "' and '" +
                                               raw[i].inst.name + "'" );
    driver[net] = i;
  }
  auto driven = [&]( const std::string& net ) { return declared.at( net ) == net_kind::input || driver.count( net ); };
  for ( const auto& r : raw )
  {
    for ( const auto& f : r.inst.fanins )
    {
      if ( !driven( f ) )
        throw error( errc::undriven_net, "line " + std::to_string( r.line ) + ": net '" + f + "' has no driver" );
    }
  }
  for ( const auto& o : nl.outputs )
  {
    if ( !driven( o ) )
      throw error( errc::undriven_net, "output '" + o + "' has no driver" );
  }

  // topological order: Kahn, smallest file index first
  std::vector<std::size_t> pending( raw.size(), 0 );
  std::vector<std::vector<std::size_t>> users( raw.size() );
  for ( std::size_t i = 0; i < raw.size(); ++i )
  {
    for ( const auto& f : raw[i].inst.fanins )
    {
      if ( auto it = driver.find( f ); it != driver.end() )
      {
        ++pending[i];
        users[it->second].push_back( i );
      }
    }
  }
  std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
  for ( std::size_t i = 0; i < raw.size(); ++i )
  {
    if ( pending[i] == 0 )
      ready.push( i );
  }
  while ( !ready.empty() )
  {
    const auto i = ready.top();
    ready.pop();
    nl.instances.push_back( raw[i].inst );
    for ( const auto u : users[i] )
    {
      if ( --pending[u] == 0 )
        ready.push( u );
    }
  }
  if ( nl.instances.size() != raw.size() )
  {
    for ( std::size_t i = 0; i < raw.size(); ++i )
    {
      if ( pending[i] > 0 )
        throw error( errc::cycle_detected, "line " + std::to_string( raw[i].line ) + ": instance '" + raw[i].inst.name +
                                               "' is part of a combinational loop" );
    }
  }
  return nl;
}

mapped_netlist read_mapped_verilog_file( const std::filesystem::path& path, const cell_library& lib )
{
  return read_mapped_verilog( read_text_file( path ), lib );
}

aig mapped_to_aig( const mapped_netlist& netlist, const cell_library& lib )
{
  aig g( netlist.name );
  std::unordered_map<std::string, literal> net;
  for ( const auto& in : netlist.inputs )
    net[in] = g.create_pi( in );
  for ( const auto& inst : netlist.instances )
  {
    const auto* c = lib.find( inst.cell_name );
    if ( !c )
      throw error( errc::unknown_cell, "unknown cell '" + inst.cell_name + "'" );
    std::vector<literal> pins;
    for ( const auto& f : inst.fanins )
      pins.push_back( net.at( f ) );
    net[inst.output] = c->build( g, pins );
  }
  for ( const auto& o : netlist.outputs )
  {
    auto it = net.find( o );
    if ( it == net.end() )
      throw error( errc::undriven_net, "output '" + o + "' has no driver" );
    g.create_po( it->second, o );
  }
  return g;
}

bool looks_like_mapped_verilog( std::string_view text )
{
  try
  {
    const auto tokens = detail::lex_verilog( text );
    for ( const auto& t : tokens )
    {
      if ( t.type == vtoken::kind::identifier && t.text == "assign" )
        return false;
    }
    for ( std::size_t i = 0; i + 1 < tokens.size(); ++i )
    {
      if ( tokens[i].text == "(" && tokens[i + 1].text == "." )
        return true;
    }
  }
  catch ( const error& )
  {
  }
  return false;
}

} // namespace aigkit
