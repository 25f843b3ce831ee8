#include <aigkit/aiger.hpp>
#include <aigkit/errors.hpp>

#include <charconv>
#include <fstream>
#include <sstream>
#include <unordered_map>
#include <vector>

namespace aigkit
{

std::string read_text_file( const std::filesystem::path& path )
{
  std::ifstream in( path, std::ios::binary );
  if ( !in )
    throw error( errc::io_error, "cannot open '" + path.string() + "' for reading" );
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file_atomic( const std::filesystem::path& path, std::string_view content )
{
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out( tmp, std::ios::binary | std::ios::trunc );
    if ( !out )
      throw error( errc::io_error, "cannot open '" + path.string() + "' for writing" );
    out.write( content.data(), static_cast<std::streamsize>( content.size() ) );
    if ( !out )
      throw error( errc::io_error, "failed writing '" + path.string() + "'" );
  }
  std::error_code ec;
  std::filesystem::rename( tmp, path, ec );
  if ( ec )
    throw error( errc::io_error, "cannot move '" + tmp.string() + "' to '" + path.string() + "': " + ec.message() );
}

namespace
{

class aiger_parser
{
public:
  aiger_parser( std::string_view data, std::string name ) : data_( data ), name_( std::move( name ) ) {}

  aig parse()
  {
    const auto header = next_line();
    std::istringstream hs{ std::string( header ) };
    std::string magic;
    hs >> magic;
    if ( magic == "aag" )
      binary_ = false;
    else if ( magic == "aig" )
      binary_ = true;
    else
      throw parse_error( line_, "expected 'aag' or 'aig' header" );
    std::vector<std::uint64_t> fields;
    std::string tok;
    while ( hs >> tok )
      fields.push_back( to_number( tok ) );
    if ( fields.size() < 5 )
      throw parse_error( line_, "header needs M I L O A" );
    const auto [m, i, l, o, a] = std::tuple{ fields[0], fields[1], fields[2], fields[3], fields[4] };
    for ( std::size_t k = 5; k < fields.size(); ++k )
    {
      if ( fields[k] != 0 )
      {
        static const char* names[] = { "bad-state", "invariant-constraint", "justice", "fairness" };
        throw error( errc::unsupported_feature,
                     std::string( "AIGER " ) + ( k - 5 < 4 ? names[k - 5] : "extension" ) + " sections are not supported" );
      }
    }
    if ( m < i + l + a )
      throw parse_error( line_, "header: M is smaller than I + L + A" );
    max_var_ = m;
    def_.assign( m + 1, definition{} );

    for ( std::uint64_t k = 0; k < i; ++k )
    {
      if ( binary_ )
        define( 1 + k, kind::input, k );
      else
      {
        const auto v = read_literal_line( 1 );
        if ( v[0] & 1u || v[0] < 2 )
          throw parse_error( line_, "input literal must be a positive even number" );
        define( v[0] >> 1, kind::input, k );
      }
    }
    latch_next_.resize( l );
    latch_init_.resize( l, 0 );
    for ( std::uint64_t k = 0; k < l; ++k )
    {
      auto v = read_literal_line( binary_ ? 1 : 2, true );
      std::uint64_t lhs = binary_ ? 2 * ( i + k + 1 ) : v[0];
      if ( !binary_ )
        v.erase( v.begin() );
      if ( lhs & 1u || lhs < 2 )
        throw parse_error( line_, "latch literal must be a positive even number" );
      latch_next_[k] = v[0];
      if ( v.size() > 1 )
      {
        if ( v[1] == 0 || v[1] == 1 )
          latch_init_[k] = static_cast<std::uint8_t>( v[1] );
        else if ( v[1] == lhs )
          throw error( errc::unsupported_feature, "line " + std::to_string( line_ ) + ": uninitialized latches are not supported" );
        else
          throw parse_error( line_, "latch init must be 0, 1 or the latch literal" );
      }
      define( lhs >> 1, kind::latch, k );
    }
    outputs_.resize( o );
    for ( std::uint64_t k = 0; k < o; ++k )
      outputs_[k] = read_literal_line( 1 )[0];

    if ( binary_ )
    {
      for ( std::uint64_t k = 0; k < a; ++k )
      {
        const std::uint64_t lhs = 2 * ( i + l + k + 1 );
        const auto d0 = decode();
        const auto d1 = decode();
        if ( d0 > lhs || d0 + d1 > lhs )
          throw parse_error( pos_, "invalid and-gate delta", true );
        const auto rhs0 = lhs - d0;
        const auto rhs1 = rhs0 - d1;
        define( lhs >> 1, kind::and_gate, k, rhs0, rhs1 );
      }
    }
    else
    {
      for ( std::uint64_t k = 0; k < a; ++k )
      {
        const auto v = read_literal_line( 3 );
        if ( v[0] & 1u || v[0] < 2 )
          throw parse_error( line_, "and-gate literal must be a positive even number" );
        define( v[0] >> 1, kind::and_gate, k, v[1], v[2] );
      }
    }
    read_symbols( i, l, o );
    return build( i, l, o );
  }

private:
  enum class kind : std::uint8_t
  {
    none,
    input,
    latch,
    and_gate
  };
  struct definition
  {
    kind k{ kind::none };
    std::uint64_t index{ 0 };
    std::uint64_t rhs0{ 0 }, rhs1{ 0 };
    std::size_t line{ 0 };
  };

  std::uint64_t to_number( std::string_view tok ) const
  {
    std::uint64_t v = 0;
    const auto [p, ec] = std::from_chars( tok.data(), tok.data() + tok.size(), v );
    if ( ec != std::errc{} || p != tok.data() + tok.size() )
      throw parse_error( line_, "expected an unsigned number, got '" + std::string( tok ) + "'" );
    return v;
  }

  std::string_view next_line()
  {
    if ( pos_ >= data_.size() )
      throw parse_error( line_ + 1, "unexpected end of file" );
    const auto end = data_.find( '\n', pos_ );
    const auto stop = end == std::string_view::npos ? data_.size() : end;
    auto line = data_.substr( pos_, stop - pos_ );
    if ( !line.empty() && line.back() == '\r' )
      line.remove_suffix( 1 );
    pos_ = end == std::string_view::npos ? data_.size() : end + 1;
    ++line_;
    return line;
  }

  std::vector<std::uint64_t> read_literal_line( std::size_t count, bool allow_extra = false )
  {
    const auto line = next_line();
    std::vector<std::uint64_t> v;
    std::size_t p = 0;
    while ( p < line.size() )
    {
      while ( p < line.size() && line[p] == ' ' )
        ++p;
      if ( p == line.size() )
        break;
      auto q = line.find( ' ', p );
      if ( q == std::string_view::npos )
        q = line.size();
      v.push_back( to_number( line.substr( p, q - p ) ) );
      p = q;
    }
    if ( v.size() < count || ( v.size() > count + ( allow_extra ? 1 : 0 ) ) )
      throw parse_error( line_, "expected " + std::to_string( count ) + " literal(s)" );
    for ( const auto x : v )
    {
      if ( ( x >> 1 ) > max_var_ )
        throw parse_error( line_, "literal " + std::to_string( x ) + " exceeds the maximum variable index" );
    }
    return v;
  }

  std::uint64_t decode()
  {
    std::uint64_t x = 0;
    unsigned shift = 0;
    while ( true )
    {
      if ( pos_ >= data_.size() )
        throw parse_error( pos_, "unexpected end of binary and-gate section", true );
      const auto c = static_cast<unsigned char>( data_[pos_++] );
      x |= static_cast<std::uint64_t>( c & 0x7F ) << shift;
      if ( !( c & 0x80 ) )
        return x;
      shift += 7;
      if ( shift > 63 )
        throw parse_error( pos_, "malformed delta encoding", true );
    }
  }

  void define( std::uint64_t var, kind k, std::uint64_t index, std::uint64_t rhs0 = 0, std::uint64_t rhs1 = 0 )
  {
    if ( var == 0 || var > max_var_ )
      throw parse_error( line_, "variable index out of range" );
    if ( def_[var].k != kind::none )
      throw parse_error( line_, "variable " + std::to_string( var ) + " defined twice" );
    if ( ( rhs0 >> 1 ) > max_var_ || ( rhs1 >> 1 ) > max_var_ )
      throw parse_error( line_, "and-gate operand exceeds the maximum variable index" );
    def_[var] = definition{ k, index, rhs0, rhs1, line_ };
  }

  void read_symbols( std::uint64_t i, std::uint64_t l, std::uint64_t o )
  {
    in_names_.assign( i, {} );
    latch_names_.assign( l, {} );
    out_names_.assign( o, {} );
    while ( pos_ < data_.size() )
    {
      const auto line = next_line();
      if ( line.empty() )
        continue;
      if ( line[0] == 'c' )
        break;  // comment section runs to the end of the file
      const auto space = line.find( ' ' );
      if ( space == std::string_view::npos || space < 2 )
        throw parse_error( line_, "malformed symbol table entry" );
      const auto idx = to_number( line.substr( 1, space - 1 ) );
      const std::string sym( line.substr( space + 1 ) );
      switch ( line[0] )
      {
      case 'i':
        if ( idx >= i )
          throw parse_error( line_, "input symbol index out of range" );
        in_names_[idx] = sym;
        break;
      case 'l':
        if ( idx >= l )
          throw parse_error( line_, "latch symbol index out of range" );
        latch_names_[idx] = sym;
        break;
      case 'o':
        if ( idx >= o )
          throw parse_error( line_, "output symbol index out of range" );
        out_names_[idx] = sym;
        break;
      case 'b':
      case 'j':
      case 'f':
        throw error( errc::unsupported_feature, "line " + std::to_string( line_ ) + ": unsupported symbol kind" );
      default:
        throw parse_error( line_, "unknown symbol table entry" );
      }
    }
  }

  aig build( std::uint64_t i, std::uint64_t l, std::uint64_t o )
  {
    aig g( name_ );
    std::vector<literal> map( max_var_ + 1 );
    std::vector<std::uint8_t> state( max_var_ + 1, 0 );  // 0 new, 1 on stack, 2 done
    map[0] = const_false;
    state[0] = 2;
    std::vector<std::uint64_t> input_vars( i ), latch_vars( l );
    for ( std::uint64_t v = 1; v <= max_var_; ++v )
    {
      if ( def_[v].k == kind::input )
        input_vars[def_[v].index] = v;
      else if ( def_[v].k == kind::latch )
        latch_vars[def_[v].index] = v;
    }
    for ( std::uint64_t k = 0; k < i; ++k )
    {
      map[input_vars[k]] = g.create_pi( in_names_[k] );
      state[input_vars[k]] = 2;
    }
    for ( std::uint64_t k = 0; k < l; ++k )
    {
      map[latch_vars[k]] = g.create_latch( latch_init_[k], latch_names_[k] );
      state[latch_vars[k]] = 2;
    }

    auto resolve = [&]( std::uint64_t lit, std::size_t line ) -> literal {
      const auto root = lit >> 1;
      if ( state[root] != 2 )
      {
        std::vector<std::pair<std::uint64_t, bool>> stack{ { root, false } };
        while ( !stack.empty() )
        {
          auto [v, expanded] = stack.back();
          stack.pop_back();
          if ( state[v] == 2 )
            continue;
          const auto& d = def_[v];
          if ( d.k != kind::and_gate )
            throw parse_error( d.line ? d.line : line, "literal " + std::to_string( 2 * v ) + " is never defined" );
          if ( expanded )
          {
            map[v] = g.create_and( map[d.rhs0 >> 1] ^ ( d.rhs0 & 1u ), map[d.rhs1 >> 1] ^ ( d.rhs1 & 1u ) );
            state[v] = 2;
            continue;
          }
          if ( state[v] == 1 )
            throw error( errc::cycle_detected, "line " + std::to_string( d.line ) + ": combinational loop through variable " +
                                                   std::to_string( v ) );
          state[v] = 1;
          stack.emplace_back( v, true );
          for ( const auto r : { d.rhs1 >> 1, d.rhs0 >> 1 } )
          {
            if ( state[r] == 1 )
              throw error( errc::cycle_detected, "line " + std::to_string( d.line ) + ": combinational loop through variable " +
                                                     std::to_string( r ) );
            if ( state[r] == 0 )
              stack.emplace_back( r, false );
          }
        }
      }
      return map[root] ^ ( lit & 1u );
    };

    // every and gate is built, even dangling ones, so the structure matches the file
    for ( std::uint64_t v = 1; v <= max_var_; ++v )
    {
      if ( def_[v].k == kind::and_gate )
        resolve( 2 * v, def_[v].line );
    }
    for ( std::uint64_t k = 0; k < o; ++k )
      g.create_po( resolve( outputs_[k], 0 ), out_names_[k] );
    for ( std::uint64_t k = 0; k < l; ++k )
      g.set_latch_next( k, resolve( latch_next_[k], 0 ) );
    return g;
  }

  std::string_view data_;
  std::string name_;
  std::size_t pos_{ 0 };
  std::size_t line_{ 0 };
  bool binary_{ false };
  std::uint64_t max_var_{ 0 };
  std::vector<definition> def_;
  std::vector<std::uint64_t> latch_next_;
  std::vector<std::uint8_t> latch_init_;
  std::vector<std::uint64_t> outputs_;
  std::vector<std::string> in_names_, latch_names_, out_names_;
};

void encode( std::string& out, std::uint64_t x )
{
  while ( x & ~0x7Full )
  {
    out.push_back( static_cast<char>( ( x & 0x7F ) | 0x80 ) );
    x >>= 7;
  }
  out.push_back( static_cast<char>( x ) );
}

} // namespace

aig read_aiger( std::string_view data, std::string name )
{
  return aiger_parser( data, std::move( name ) ).parse();
}

aig read_aiger_file( const std::filesystem::path& path )
{
  return read_aiger( read_text_file( path ), path.stem().string() );
}

std::string write_aiger( const aig& g, aiger_mode mode )
{
  // reachable And nodes in topological order
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
  std::vector<std::uint64_t> var( g.size(), 0 );
  std::uint64_t next = 1;
  for ( std::size_t i = 0; i < g.num_cis(); ++i )
    var[g.ci_at( i )] = next++;
  std::vector<node_id> ands;
  for ( const auto n : topo_order( g ) )
  {
    if ( g.is_and( n ) && reach[n] )
    {
      ands.push_back( n );
      var[n] = next++;
    }
  }
  auto lit = [&]( literal l ) { return 2 * var[l.node()] + ( l.complemented() ? 1u : 0u ); };

  const auto i = g.num_pis(), l = g.num_latches(), o = g.num_pos(), a = ands.size();
  std::string out = ( mode == aiger_mode::ascii ? "aag " : "aig " ) + std::to_string( i + l + a ) + " " +
                    std::to_string( i ) + " " + std::to_string( l ) + " " + std::to_string( o ) + " " +
                    std::to_string( a ) + "\n";
  if ( mode == aiger_mode::ascii )
  {
    for ( std::size_t k = 0; k < i; ++k )
      out += std::to_string( 2 * var[g.pis()[k]] ) + "\n";
  }
  for ( std::size_t k = 0; k < l; ++k )
  {
    const auto& lt = g.latches()[k];
    if ( mode == aiger_mode::ascii )
      out += std::to_string( 2 * var[lt.output] ) + " ";
    out += std::to_string( lit( lt.next ) );
    if ( lt.init )
      out += " 1";
    out += "\n";
  }
  for ( std::size_t k = 0; k < o; ++k )
    out += std::to_string( lit( g.pos()[k].driver ) ) + "\n";
  for ( const auto n : ands )
  {
    auto r0 = lit( g.fanin0( n ) ), r1 = lit( g.fanin1( n ) );
    if ( r0 < r1 )
      std::swap( r0, r1 );
    const auto lhs = 2 * var[n];
    if ( mode == aiger_mode::ascii )
      out += std::to_string( lhs ) + " " + std::to_string( r0 ) + " " + std::to_string( r1 ) + "\n";
    else
    {
      encode( out, lhs - r0 );
      encode( out, r0 - r1 );
    }
  }
  for ( std::size_t k = 0; k < i; ++k )
  {
    if ( !g.pi_name( k ).empty() )
      out += "i" + std::to_string( k ) + " " + g.pi_name( k ) + "\n";
  }
  for ( std::size_t k = 0; k < l; ++k )
  {
    if ( !g.latches()[k].name.empty() )
      out += "l" + std::to_string( k ) + " " + g.latches()[k].name + "\n";
  }
  for ( std::size_t k = 0; k < o; ++k )
  {
    if ( !g.pos()[k].name.empty() )
      out += "o" + std::to_string( k ) + " " + g.pos()[k].name + "\n";
  }
  return out;
}

void write_aiger_file( const aig& g, const std::filesystem::path& path, aiger_mode mode )
{
  write_file_atomic( path, write_aiger( g, mode ) );
}

} // namespace aigkit
