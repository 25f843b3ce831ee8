#include <aigkit/aiger.hpp>
#include <aigkit/edgelist.hpp>
#include <aigkit/errors.hpp>

#include <algorithm>
#include <cctype>
#include <sstream>
#include <unordered_map>
#include <unordered_set>
#include <utility>

namespace aigkit
{

namespace
{

bool usable_name( const std::string& name, std::unordered_set<std::string>& used )
{
  if ( name.empty() || std::any_of( name.begin(), name.end(), []( unsigned char c ) { return std::isspace( c ); } ) )
    return false;
  return used.insert( name ).second;
}

/* ids of every exported element of an AIG */
struct aig_numbering
{
  std::vector<std::string> ext_in, ext_out;  // per CI / CO
  std::vector<std::string> node;             // per node id; empty when not exported
  std::vector<node_id> ands;                 // exported Ands in topological order
  std::vector<std::size_t> rank;             // export position per node (constant first)

  aig_numbering( const aig& g, bool keep_names )
  {
    const auto nci = g.num_cis(), nco = g.num_cos();
    std::unordered_set<std::string> used;
    for ( std::size_t i = 0; i < nci; ++i )
      ext_in.push_back( std::to_string( i + 1 ) );
    for ( std::size_t i = 0; i < nco; ++i )
      ext_out.push_back( std::to_string( nci + i + 1 ) );
    for ( const auto& s : ext_in )
      used.insert( s );
    for ( const auto& s : ext_out )
      used.insert( s );

    std::vector<char> reachable( g.size(), 0 );
    std::vector<node_id> stack;
    for ( std::size_t i = 0; i < nco; ++i )
      stack.push_back( g.co_at( i ).node() );
    while ( !stack.empty() )
    {
      const auto n = stack.back();
      stack.pop_back();
      if ( reachable[n] )
        continue;
      reachable[n] = 1;
      if ( g.is_and( n ) )
      {
        stack.push_back( g.fanin0( n ).node() );
        stack.push_back( g.fanin1( n ).node() );
      }
    }

    node.assign( g.size(), {} );
    rank.assign( g.size(), 0 );
    node[0] = "0";
    auto next_id = nci + nco + 1;
    for ( std::size_t i = 0; i < nci; ++i )
    {
      const auto n = g.ci_at( i );
      std::string name;
      if ( keep_names )
        name = i < g.num_pis() ? g.pi_name( i ) : g.latches()[i - g.num_pis()].name;
      node[n] = keep_names && usable_name( name, used ) ? name : std::to_string( next_id );
      rank[n] = i + 1;
      ++next_id;
    }
    for ( const auto n : topo_order( g ) )
    {
      if ( g.is_and( n ) && reachable[n] )
      {
        ands.push_back( n );
        rank[n] = nci + ands.size();
        node[n] = std::to_string( next_id++ );
      }
    }
    if ( keep_names )
    {
      for ( std::size_t i = 0; i < g.num_pos(); ++i )
      {
        if ( usable_name( g.pos()[i].name, used ) )
          ext_out[i] = g.pos()[i].name;
      }
    }
  }
};

/* fanins of an And in export order: the earlier-exported fanin comes first, so the
   embedding does not depend on how the in-memory network happens to number its nodes */
std::pair<literal, literal> ordered_fanins( const aig& g, const aig_numbering& ids, node_id n )
{
  const auto f0 = g.fanin0( n ), f1 = g.fanin1( n );
  if ( ids.rank[f1.node()] < ids.rank[f0.node()] )
    return { f1, f0 };
  return { f0, f1 };
}

std::string embedding( const std::pair<literal, literal>& f )
{
  return std::string{ f.first.complemented() ? '1' : '0', f.second.complemented() ? '1' : '0' };
}

std::vector<std::string> split_tokens( std::string_view line )
{
  std::vector<std::string> out;
  std::size_t i = 0;
  while ( i < line.size() )
  {
    while ( i < line.size() && std::isspace( static_cast<unsigned char>( line[i] ) ) )
      ++i;
    const auto start = i;
    while ( i < line.size() && !std::isspace( static_cast<unsigned char>( line[i] ) ) )
      ++i;
    if ( i > start )
      out.emplace_back( line.substr( start, i - start ) );
  }
  return out;
}

bool is_feature( const std::string& s )
{
  return s.size() == 2 && ( s[0] == '0' || s[0] == '1' ) && ( s[1] == '0' || s[1] == '1' );
}

bool is_numeric( const std::string& s )
{
  return !s.empty() && std::all_of( s.begin(), s.end(), []( unsigned char c ) { return std::isdigit( c ); } );
}

} // namespace

std::string write_edgelist_aig( const aig& g, bool keep_names )
{
  const aig_numbering ids( g, keep_names );
  std::ostringstream os;
  for ( std::size_t i = 0; i < g.num_cis(); ++i )
    os << ids.ext_in[i] << ' ' << ids.node[g.ci_at( i )] << " Pi 00\n";
  for ( const auto n : ids.ands )
  {
    const auto f = ordered_fanins( g, ids, n );
    const auto e = embedding( f );
    os << ids.node[f.first.node()] << ' ' << ids.node[n] << " AIG " << e << '\n';
    os << ids.node[f.second.node()] << ' ' << ids.node[n] << " AIG " << e << '\n';
  }
  for ( std::size_t i = 0; i < g.num_cos(); ++i )
  {
    const auto d = g.co_at( i );
    os << ids.node[d.node()] << ' ' << ids.ext_out[i] << " Po " << ( d.complemented() ? "10" : "00" ) << '\n';
  }
  return os.str();
}

std::string write_edgelist_mapped( const mapped_netlist& nl, bool keep_names )
{
  const auto npi = nl.inputs.size(), npo = nl.outputs.size();
  std::unordered_set<std::string> used;
  std::unordered_map<std::string, std::string> net_id;  // net -> id of its driver node
  for ( std::size_t i = 0; i < npi + npo; ++i )
    used.insert( std::to_string( i + 1 ) );
  auto next_id = npi + npo + 1;
  std::vector<std::string> pi_node;
  for ( const auto& in : nl.inputs )
  {
    pi_node.push_back( keep_names && usable_name( in, used ) ? in : std::to_string( next_id ) );
    ++next_id;
    net_id[in] = pi_node.back();
  }
  std::vector<std::string> inst_id;
  for ( const auto& inst : nl.instances )
  {
    inst_id.push_back( keep_names && usable_name( inst.name, used ) ? inst.name : std::to_string( next_id ) );
    ++next_id;
    net_id[inst.output] = inst_id.back();
  }
  std::ostringstream os;
  for ( std::size_t i = 0; i < npi; ++i )
    os << i + 1 << ' ' << pi_node[i] << " Pi 00\n";
  for ( std::size_t k = 0; k < nl.instances.size(); ++k )
  {
    const auto& inst = nl.instances[k];
    for ( const auto& f : inst.fanins )
      os << net_id.at( f ) << ' ';
    os << inst_id[k] << ' ' << inst.cell_name << '\n';
  }
  for ( std::size_t i = 0; i < npo; ++i )
  {
    std::string ext = std::to_string( npi + i + 1 );
    if ( keep_names && usable_name( nl.outputs[i], used ) )
      ext = nl.outputs[i];
    os << net_id.at( nl.outputs[i] ) << ' ' << ext << " Po 00\n";
  }
  return os.str();
}

void write_edgelist_file( const std::filesystem::path& path, std::string_view content )
{
  write_file_atomic( path, content );
}

edgelist_graph parse_edgelist( std::string_view text )
{
  edgelist_graph eg;
  std::unordered_map<std::string, std::size_t> index;
  auto node = [&]( const std::string& id ) {
    auto [it, inserted] = index.emplace( id, eg.nodes.size() );
    if ( inserted )
    {
      eg.nodes.push_back( id );
      eg.features.emplace_back();
    }
    return it->second;
  };

  struct and_lines
  {
    std::vector<std::string> fanins;
    std::string feature;
    std::size_t line{ 0 };
  };
  std::vector<std::pair<std::string, std::string>> pis;      // ext, internal
  std::vector<std::tuple<std::string, std::string, bool>> pos;  // internal, ext, complemented
  std::unordered_map<std::string, and_lines> ands;
  std::vector<std::string> and_order;
  bool saw_aig = false, saw_cell = false;

  std::size_t line_no = 0;
  std::size_t pos_in_text = 0;
  while ( pos_in_text < text.size() )
  {
    auto end = text.find( '\n', pos_in_text );
    if ( end == std::string_view::npos )
      end = text.size();
    const auto line = text.substr( pos_in_text, end - pos_in_text );
    pos_in_text = end + 1;
    ++line_no;
    const auto tok = split_tokens( line );
    if ( tok.empty() )
      continue;
    ++eg.num_lines;
    if ( tok.size() == 4 && ( tok[2] == "Pi" || tok[2] == "Po" || tok[2] == "AIG" ) )
    {
      if ( !is_feature( tok[3] ) )
        throw parse_error( line_no, "malformed feature '" + tok[3] + "'" );
      const auto s = node( tok[0] ), d = node( tok[1] );
      eg.edges.push_back( { tok[0], tok[1] } );
      if ( tok[2] == "Pi" )
      {
        if ( tok[3] != "00" )
          throw parse_error( line_no, "Pi lines carry feature 00" );
        pis.emplace_back( tok[0], tok[1] );
      }
      else if ( tok[2] == "Po" )
      {
        if ( tok[3] != "00" && tok[3] != "10" )
          throw parse_error( line_no, "Po lines carry feature 00 or 10" );
        pos.emplace_back( tok[0], tok[1], tok[3] == "10" );
      }
      else
      {
        saw_aig = true;
        auto& a = ands[tok[1]];
        if ( a.fanins.empty() )
        {
          and_order.push_back( tok[1] );
          a.feature = tok[3];
          a.line = line_no;
        }
        else if ( a.feature != tok[3] )
        {
          throw error( errc::inconsistent_feature, "line " + std::to_string( line_no ) + ": node " + tok[1] +
                                                       " has features " + a.feature + " and " + tok[3] );
        }
        if ( a.fanins.size() == 2 )
          throw parse_error( line_no, "node " + tok[1] + " has more than two AIG in-edges" );
        a.fanins.push_back( tok[0] );
        eg.features[d] = tok[3];
      }
      (void)s;
      continue;
    }
    for ( const auto& t : tok )
    {
      if ( t == "Pi" || t == "Po" || t == "AIG" )
        throw parse_error( line_no, "'" + t + "' lines have exactly 4 fields" );
    }
    if ( tok.size() < 3 )
      throw parse_error( line_no, "expected at least 3 tokens" );
    // mapped cell line: fanins..., dst, cell
    saw_cell = true;
    const auto& dst = tok[tok.size() - 2];
    const auto d = node( dst );
    for ( std::size_t i = 0; i + 2 < tok.size(); ++i )
    {
      node( tok[i] );
      eg.edges.push_back( { tok[i], dst } );
    }
    eg.features[d] = tok.back();
  }
  if ( saw_aig && saw_cell )
    throw parse_error( line_no, "document mixes AIG lines and cell lines" );
  eg.flavor = saw_cell ? edgelist_flavor::mapped : edgelist_flavor::aig;
  for ( auto& f : eg.features )
  {
    if ( f.empty() && eg.flavor == edgelist_flavor::aig )
      f = "00";
  }
  if ( eg.flavor == edgelist_flavor::mapped )
    return eg;

  for ( const auto& id : and_order )
  {
    if ( ands[id].fanins.size() != 2 )
      throw parse_error( ands[id].line, "node " + id + " has " + std::to_string( ands[id].fanins.size() ) +
                                            " AIG in-edges instead of 2" );
  }

  aig g;
  std::unordered_map<std::string, literal> lit;
  lit["0"] = const_false;
  for ( const auto& [ext, internal] : pis )
  {
    if ( lit.count( internal ) )
      throw parse_error( 1, "input node " + internal + " is declared twice" );
    lit[internal] = g.create_pi( is_numeric( internal ) ? std::string{} : internal );
  }
  // resolve And nodes depth-first (documents need not be topologically ordered)
  std::unordered_set<std::string> active;
  std::vector<std::pair<std::string, bool>> stack;
  auto resolve = [&]( const std::string& root ) {
    stack.emplace_back( root, false );
    while ( !stack.empty() )
    {
      auto [id, expanded] = stack.back();
      stack.pop_back();
      if ( lit.count( id ) )
        continue;
      auto it = ands.find( id );
      if ( it == ands.end() )
        throw parse_error( 0, "node " + id + " is used but never defined" );
      if ( !expanded )
      {
        if ( !active.insert( id ).second )
          throw error( errc::cycle_detected, "node " + id + " is part of a cycle" );
        stack.emplace_back( id, true );
        for ( const auto& f : it->second.fanins )
        {
          if ( !lit.count( f ) )
            stack.emplace_back( f, false );
        }
        continue;
      }
      active.erase( id );
      const auto& a = it->second;
      const auto f0 = lit.at( a.fanins[0] ) ^ ( a.feature[0] == '1' );
      const auto f1 = lit.at( a.fanins[1] ) ^ ( a.feature[1] == '1' );
      lit[id] = g.create_and( f0, f1 );
    }
  };
  for ( const auto& id : and_order )
    resolve( id );
  for ( const auto& [internal, ext, complemented] : pos )
  {
    if ( !lit.count( internal ) )
      resolve( internal );
    g.create_po( lit.at( internal ) ^ complemented, is_numeric( ext ) ? std::string{} : ext );
  }
  eg.network = std::move( g );
  return eg;
}

std::string write_features_aig( const aig& g )
{
  const aig_numbering ids( g, false );
  std::ostringstream os;
  os << "node_id,f1,f2\n";
  for ( std::size_t i = 0; i < g.num_cis(); ++i )
    os << ids.node[g.ci_at( i )] << ",0,0\n";
  for ( const auto n : ids.ands )
  {
    const auto f = ordered_fanins( g, ids, n );
    os << ids.node[n] << ',' << ( f.first.complemented() ? 1 : 0 ) << ',' << ( f.second.complemented() ? 1 : 0 ) << '\n';
  }
  return os.str();
}

std::string write_features_mapped( const mapped_netlist& nl )
{
  std::vector<std::string> vocab;
  for ( const auto& inst : nl.instances )
  {
    if ( std::find( vocab.begin(), vocab.end(), inst.cell_name ) == vocab.end() )
      vocab.push_back( inst.cell_name );
  }
  std::ostringstream os;
  os << "# vocab: ";
  for ( std::size_t i = 0; i < vocab.size(); ++i )
    os << ( i ? "," : "" ) << vocab[i];
  os << "\nnode_id";
  for ( std::size_t i = 0; i < vocab.size(); ++i )
    os << ",f" << i + 1;
  os << '\n';
  auto id = nl.inputs.size() + nl.outputs.size() + 1;
  for ( std::size_t i = 0; i < nl.inputs.size(); ++i, ++id )
  {
    os << id;
    for ( std::size_t k = 0; k < vocab.size(); ++k )
      os << ",0";
    os << '\n';
  }
  for ( const auto& inst : nl.instances )
  {
    os << id++;
    for ( const auto& v : vocab )
      os << ',' << ( v == inst.cell_name ? 1 : 0 );
    os << '\n';
  }
  return os.str();
}

} // namespace aigkit
