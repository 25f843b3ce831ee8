#include <aigkit/aiger.hpp>
#include <aigkit/blif.hpp>
#include <aigkit/errors.hpp>

#include <sstream>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace aigkit
{

namespace
{

struct cover_row
{
  std::string inputs;
  char output{ '1' };
};

struct names_def
{
  std::vector<std::string> inputs;
  std::vector<cover_row> rows;
  std::size_t line{ 0 };
};

struct latch_def
{
  std::string input, output;
  std::uint8_t init{ 0 };
  std::size_t line{ 0 };
};

std::vector<std::string> split( std::string_view s )
{
  std::vector<std::string> out;
  std::size_t p = 0;
  while ( p < s.size() )
  {
    while ( p < s.size() && ( s[p] == ' ' || s[p] == '\t' ) )
      ++p;
    if ( p == s.size() )
      break;
    auto q = p;
    while ( q < s.size() && s[q] != ' ' && s[q] != '\t' )
      ++q;
    out.emplace_back( s.substr( p, q - p ) );
    p = q;
  }
  return out;
}

class blif_reader
{
public:
  explicit blif_reader( std::string name ) : name_( std::move( name ) ) {}

  aig read( std::string_view text )
  {
    collect( text );
    return build();
  }

private:
  void collect( std::string_view text )
  {
    std::size_t pos = 0, line_no = 0;
    names_def* current = nullptr;
    bool ended = false;
    std::string pending;
    std::size_t pending_line = 0;
    while ( pos <= text.size() && !ended )
    {
      if ( pos == text.size() && pending.empty() )
        break;
      auto end = text.find( '\n', pos );
      if ( end == std::string_view::npos )
        end = text.size();
      std::string raw( text.substr( pos, end - pos ) );
      pos = end + 1;
      ++line_no;
      if ( !raw.empty() && raw.back() == '\r' )
        raw.pop_back();
      if ( auto hash = raw.find( '#' ); hash != std::string::npos )
        raw.erase( hash );
      if ( pending.empty() )
        pending_line = line_no;
      if ( !raw.empty() && raw.back() == '\\' )
      {
        raw.pop_back();
        pending += raw + " ";
        if ( pos > text.size() )
          throw parse_error( line_no, "continuation at end of file" );
        continue;
      }
      const std::string full = pending + raw;
      pending.clear();
      const auto tokens = split( full );
      if ( tokens.empty() )
        continue;
      const auto& head = tokens[0];
      const auto line = pending_line;
      if ( head[0] != '.' )
      {
        if ( !current )
          throw parse_error( line, "cover row outside of a .names block" );
        cover_row row;
        if ( current->inputs.empty() )
        {
          if ( tokens.size() != 1 || tokens[0].size() != 1 )
            throw parse_error( line, "constant cover rows hold a single output value" );
          row.output = tokens[0][0];
        }
        else
        {
          if ( tokens.size() != 2 )
            throw parse_error( line, "cover row needs an input pattern and an output value" );
          if ( tokens[0].size() != current->inputs.size() )
            throw parse_error( line, "cover row width does not match the .names inputs" );
          for ( const auto c : tokens[0] )
          {
            if ( c != '0' && c != '1' && c != '-' )
              throw parse_error( line, "invalid character in cover row" );
          }
          if ( tokens[1].size() != 1 )
            throw parse_error( line, "invalid cover output value" );
          row.inputs = tokens[0];
          row.output = tokens[1][0];
        }
        if ( row.output != '0' && row.output != '1' )
          throw parse_error( line, "cover output must be 0 or 1" );
        if ( !current->rows.empty() && current->rows.front().output != row.output )
          throw parse_error( line, "cover mixes on-set and off-set rows" );
        current->rows.push_back( row );
        continue;
      }
      current = nullptr;
      if ( head == ".model" )
      {
        if ( tokens.size() > 1 && name_.empty() )
          name_ = tokens[1];
        model_name_ = tokens.size() > 1 ? tokens[1] : std::string{};
      }
      else if ( head == ".inputs" )
      {
        for ( std::size_t k = 1; k < tokens.size(); ++k )
          inputs_.push_back( tokens[k] );
      }
      else if ( head == ".outputs" )
      {
        for ( std::size_t k = 1; k < tokens.size(); ++k )
          outputs_.push_back( tokens[k] );
      }
      else if ( head == ".names" )
      {
        if ( tokens.size() < 2 )
          throw parse_error( line, ".names needs an output signal" );
        names_def d;
        d.inputs.assign( tokens.begin() + 1, tokens.end() - 1 );
        d.line = line;
        const auto& out = tokens.back();
        if ( driver_line_.count( out ) )
          throw parse_error( line, "signal '" + out + "' is driven more than once" );
        driver_line_[out] = line;
        auto [it, ok] = names_.emplace( out, std::move( d ) );
        (void)ok;
        current = &it->second;
      }
      else if ( head == ".latch" )
      {
        if ( tokens.size() < 3 || tokens.size() > 6 )
          throw parse_error( line, "malformed .latch" );
        latch_def l;
        l.input = tokens[1];
        l.output = tokens[2];
        l.line = line;
        if ( tokens.size() == 4 || tokens.size() == 6 )
        {
          const auto& init = tokens.back();
          if ( init == "1" )
            l.init = 1;
          else if ( init == "0" || init == "2" || init == "3" )
            l.init = 0;
          else
            throw parse_error( line, "latch init must be 0, 1, 2 or 3" );
        }
        if ( driver_line_.count( l.output ) )
          throw parse_error( line, "signal '" + l.output + "' is driven more than once" );
        driver_line_[l.output] = line;
        latches_.push_back( l );
      }
      else if ( head == ".end" )
      {
        ended = true;
      }
      else if ( head == ".exdc" || head == ".subckt" || head == ".gate" || head == ".mlatch" || head == ".search" ||
                head == ".clock" || head == ".start_kiss" || head == ".cname" || head == ".attr" || head == ".param" ||
                head == ".conn" || head == ".default_input_arrival" || head == ".default_output_required" ||
                head == ".wire_load_slope" || head == ".area" || head == ".delay" || head == ".input_arrival" ||
                head == ".output_required" )
      {
        throw error( errc::unsupported_directive, "line " + std::to_string( line ) + ": unsupported directive " + head );
      }
      else
      {
        throw parse_error( line, "unknown directive " + head );
      }
    }
  }

  aig build()
  {
    aig g( name_ );
    std::unordered_map<std::string, literal> signal;
    for ( const auto& in : inputs_ )
    {
      if ( signal.count( in ) )
        throw error( errc::multiple_drivers, "input '" + in + "' declared twice" );
      if ( driver_line_.count( in ) )
        throw error( errc::multiple_drivers, "input '" + in + "' is also driven by line " + std::to_string( driver_line_[in] ) );
      signal[in] = g.create_pi( in );
    }
    for ( const auto& l : latches_ )
      signal[l.output] = g.create_latch( l.init, l.output );

    std::unordered_set<std::string> on_stack;
    auto resolve = [&]( const std::string& root, std::size_t ref_line ) -> literal {
      if ( auto it = signal.find( root ); it != signal.end() )
        return it->second;
      std::vector<std::pair<std::string, bool>> stack{ { root, false } };
      while ( !stack.empty() )
      {
        auto [s, expanded] = stack.back();
        stack.pop_back();
        if ( signal.count( s ) )
          continue;
        auto it = names_.find( s );
        if ( it == names_.end() )
          throw error( errc::undriven_net, "line " + std::to_string( ref_line ) + ": signal '" + s + "' has no driver" );
        const auto& d = it->second;
        if ( expanded )
        {
          on_stack.erase( s );
          signal[s] = build_cover( g, d, signal );
          continue;
        }
        if ( on_stack.count( s ) )
          throw error( errc::cycle_detected, "line " + std::to_string( d.line ) + ": combinational loop through '" + s + "'" );
        on_stack.insert( s );
        stack.emplace_back( s, true );
        for ( const auto& in : d.inputs )
        {
          if ( on_stack.count( in ) )
            throw error( errc::cycle_detected, "line " + std::to_string( d.line ) + ": combinational loop through '" + in + "'" );
          if ( !signal.count( in ) )
            stack.emplace_back( in, false );
        }
        ref_line = d.line;
      }
      return signal.at( root );
    };

    for ( const auto& out : outputs_ )
      g.create_po( resolve( out, 0 ), out );
    for ( std::size_t k = 0; k < latches_.size(); ++k )
      g.set_latch_next( k, resolve( latches_[k].input, latches_[k].line ) );
    return g;
  }

  static literal build_cover( aig& g, const names_def& d, const std::unordered_map<std::string, literal>& signal )
  {
    if ( d.rows.empty() )
      return const_false;
    const bool offset = d.rows.front().output == '0';
    literal sum = const_false;
    for ( const auto& row : d.rows )
    {
      literal term = const_true;
      for ( std::size_t k = 0; k < row.inputs.size(); ++k )
      {
        if ( row.inputs[k] == '-' )
          continue;
        term = g.create_and( term, signal.at( d.inputs[k] ) ^ ( row.inputs[k] == '0' ) );
      }
      sum = g.create_or( sum, term );
    }
    return offset ? !sum : sum;
  }

  std::string name_;
  std::string model_name_;
  std::vector<std::string> inputs_, outputs_;
  std::unordered_map<std::string, names_def> names_;
  std::unordered_map<std::string, std::size_t> driver_line_;
  std::vector<latch_def> latches_;
};

} // namespace

aig read_blif( std::string_view text, std::string name )
{
  return blif_reader( std::move( name ) ).read( text );
}

aig read_blif_file( const std::filesystem::path& path )
{
  return read_blif( read_text_file( path ), path.stem().string() );
}

std::string write_blif( const aig& g )
{
  std::unordered_set<std::string> used;
  std::vector<std::string> pi_names( g.num_pis() ), latch_names( g.num_latches() );
  auto unique = [&]( std::string base ) {
    auto s = base;
    for ( int k = 1; used.count( s ); ++k )
      s = base + "_" + std::to_string( k );
    used.insert( s );
    return s;
  };
  for ( std::size_t i = 0; i < g.num_pis(); ++i )
    pi_names[i] = unique( g.pi_name( i ).empty() ? "pi" + std::to_string( i ) : g.pi_name( i ) );
  for ( std::size_t i = 0; i < g.num_latches(); ++i )
    latch_names[i] = unique( g.latches()[i].name.empty() ? "lo" + std::to_string( i ) : g.latches()[i].name );
  std::vector<std::string> po_names( g.num_pos() );
  for ( std::size_t i = 0; i < g.num_pos(); ++i )
    po_names[i] = unique( g.pos()[i].name.empty() ? "po" + std::to_string( i ) : g.pos()[i].name );

  std::unordered_map<node_id, std::string> net;
  for ( std::size_t i = 0; i < g.num_pis(); ++i )
    net[g.pis()[i]] = pi_names[i];
  for ( std::size_t i = 0; i < g.num_latches(); ++i )
    net[g.latches()[i].output] = latch_names[i];

  std::ostringstream os;
  os << ".model " << ( g.name().empty() ? "top" : g.name() ) << "\n.inputs";
  for ( const auto& n : pi_names )
    os << ' ' << n;
  os << "\n.outputs";
  for ( const auto& n : po_names )
    os << ' ' << n;
  os << '\n';

  std::vector<std::string> latch_inputs( g.num_latches() );
  for ( std::size_t i = 0; i < g.num_latches(); ++i )
    latch_inputs[i] = unique( "li" + std::to_string( i ) );
  for ( std::size_t i = 0; i < g.num_latches(); ++i )
    os << ".latch " << latch_inputs[i] << ' ' << latch_names[i] << ' ' << int( g.latches()[i].init ) << '\n';

  std::vector<char> reach( g.size(), 0 );
  std::vector<node_id> stack;
  for ( std::size_t i = 0; i < g.num_cos(); ++i )
    stack.push_back( g.co_at( i ).node() );
  while ( !stack.empty() )
  {
    const auto n = stack.back();
    stack.pop_back();
    if ( reach[n] )
      continue;
    reach[n] = 1;
    if ( g.is_and( n ) )
    {
      stack.push_back( g.fanin0( n ).node() );
      stack.push_back( g.fanin1( n ).node() );
    }
  }
  for ( const auto n : topo_order( g ) )
  {
    if ( !g.is_and( n ) || !reach[n] )
      continue;
    const auto name = unique( "n" + std::to_string( n ) );
    net[n] = name;
    const auto f0 = g.fanin0( n ), f1 = g.fanin1( n );
    os << ".names " << net.at( f0.node() ) << ' ' << net.at( f1.node() ) << ' ' << name << '\n'
       << ( f0.complemented() ? '0' : '1' ) << ( f1.complemented() ? '0' : '1' ) << " 1\n";
  }
  auto drive = [&]( const std::string& target, literal l ) {
    if ( l.node() == 0 )
    {
      os << ".names " << target << '\n';
      if ( l.complemented() )
        os << "1\n";
      return;
    }
    os << ".names " << net.at( l.node() ) << ' ' << target << '\n' << ( l.complemented() ? '0' : '1' ) << " 1\n";
  };
  for ( std::size_t i = 0; i < g.num_pos(); ++i )
    drive( po_names[i], g.pos()[i].driver );
  for ( std::size_t i = 0; i < g.num_latches(); ++i )
    drive( latch_inputs[i], g.latches()[i].next );
  os << ".end\n";
  return os.str();
}

void write_blif_file( const aig& g, const std::filesystem::path& path )
{
  write_file_atomic( path, write_blif( g ) );
}

} // namespace aigkit
