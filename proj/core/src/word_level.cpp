#include <aigkit/aiger.hpp>
#include <aigkit/errors.hpp>
#include <aigkit/word_level.hpp>

#include "verilog_lexer.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <set>

namespace aigkit
{

using detail::vcursor;
using detail::vtoken;

namespace
{

std::uint32_t parse_uint( const vtoken& t )
{
  std::uint32_t v = 0;
  const auto* b = t.text.data();
  const auto [p, ec] = std::from_chars( b, b + t.text.size(), v );
  if ( ec != std::errc{} || p != b + t.text.size() )
    throw parse_error( t.line, "expected an unsigned integer but found '" + t.text + "'" );
  return v;
}

/* accepts 13, 4'd3, 4'b0011, 8'hff */
word_expr parse_constant( const vtoken& t )
{
  word_expr e;
  e.kind = word_expr::op::constant;
  const auto tick = t.text.find( '\'' );
  std::string digits = t.text;
  int base = 10;
  std::uint32_t width = 0;
  if ( tick != std::string::npos )
  {
    width = parse_uint( vtoken{ vtoken::kind::number, t.text.substr( 0, tick ), t.line } );
    if ( tick + 1 >= t.text.size() )
      throw parse_error( t.line, "malformed constant '" + t.text + "'" );
    switch ( std::tolower( static_cast<unsigned char>( t.text[tick + 1] ) ) )
    {
    case 'd': base = 10; break;
    case 'b': base = 2; break;
    case 'h': base = 16; break;
    case 'o': base = 8; break;
    default: throw parse_error( t.line, "malformed constant '" + t.text + "'" );
    }
    digits = t.text.substr( tick + 2 );
  }
  digits.erase( std::remove( digits.begin(), digits.end(), '_' ), digits.end() );
  const auto [p, ec] = std::from_chars( digits.data(), digits.data() + digits.size(), e.value, base );
  if ( digits.empty() || ec != std::errc{} || p != digits.data() + digits.size() )
    throw parse_error( t.line, "malformed constant '" + t.text + "'" );
  if ( width == 0 )
  {
    width = 1;
    while ( width < 64 && ( e.value >> width ) != 0 )
      ++width;
  }
  if ( width > 64 )
    throw error( errc::width_mismatch, "line " + std::to_string( t.line ) + ": constants wider than 64 bits are not supported" );
  if ( width < 64 && ( e.value >> width ) != 0 )
    throw error( errc::width_mismatch, "line " + std::to_string( t.line ) + ": constant '" + t.text + "' does not fit its width" );
  e.width = width;
  return e;
}

class expr_parser
{
public:
  expr_parser( vcursor& cur, const std::map<std::string, std::uint32_t>& inputs ) : cur_( cur ), inputs_( inputs ) {}

  word_expr parse() { return parse_binary( 0 ); }

private:
  static int precedence( std::string_view op )
  {
    if ( op == "|" )
      return 1;
    if ( op == "^" )
      return 2;
    if ( op == "&" )
      return 3;
    if ( op == "+" || op == "-" )
      return 4;
    if ( op == "*" )
      return 5;
    return -1;
  }

  static bool is_unsupported( std::string_view op )
  {
    static const std::set<std::string_view> bad{ "/", "%", "<", ">", "!", "?", "=", "{", "}" };
    return bad.count( op ) > 0;
  }

  void reject_operator()
  {
    const auto& t = cur_.peek();
    if ( t.type == vtoken::kind::symbol && is_unsupported( t.text ) )
    {
      // report compound operators (<<, >=, ==, ...) as a unit
      std::string op = t.text;
      const auto& n = cur_.peek( 1 );
      if ( n.type == vtoken::kind::symbol && ( n.text == "<" || n.text == ">" || n.text == "=" || n.text == "&" || n.text == "|" ) )
        op += n.text;
      throw error( errc::unsupported_operator, "line " + std::to_string( t.line ) + ": operator '" + op + "' is not supported" );
    }
  }

  word_expr parse_binary( int min_prec )
  {
    auto lhs = parse_unary();
    while ( true )
    {
      reject_operator();
      const auto& t = cur_.peek();
      if ( t.type != vtoken::kind::symbol )
        break;
      const auto prec = precedence( t.text );
      if ( prec < 0 || prec < min_prec )
        break;
      const auto op = cur_.next().text;
      if ( cur_.peek().type == vtoken::kind::symbol && ( cur_.peek().text == "&" || cur_.peek().text == "|" || cur_.peek().text == "*" ) &&
           cur_.peek().text == op )
        throw error( errc::unsupported_operator, "line " + std::to_string( t.line ) + ": operator '" + op + op + "' is not supported" );
      auto rhs = parse_binary( prec + 1 );
      word_expr e;
      e.kind = op == "|"   ? word_expr::op::or_
               : op == "^" ? word_expr::op::xor_
               : op == "&" ? word_expr::op::and_
               : op == "+" ? word_expr::op::add
               : op == "-" ? word_expr::op::sub
                           : word_expr::op::mul;
      e.operands.push_back( std::move( lhs ) );
      e.operands.push_back( std::move( rhs ) );
      lhs = std::move( e );
    }
    return lhs;
  }

  word_expr parse_unary()
  {
    reject_operator();
    const auto& t = cur_.peek();
    if ( t.type == vtoken::kind::symbol && t.text == "~" )
    {
      cur_.next();
      word_expr e;
      e.kind = word_expr::op::not_;
      e.operands.push_back( parse_unary() );
      return e;
    }
    if ( t.type == vtoken::kind::symbol && t.text == "-" )
      throw error( errc::unsupported_operator, "line " + std::to_string( t.line ) + ": unary '-' is not supported" );
    if ( cur_.accept( "(" ) )
    {
      auto e = parse_binary( 0 );
      cur_.expect( ")" );
      return e;
    }
    if ( t.type == vtoken::kind::number )
      return parse_constant( cur_.next() );
    const auto line = t.line;
    const auto name = cur_.identifier();
    auto it = inputs_.find( name );
    if ( it == inputs_.end() )
      throw parse_error( line, "'" + name + "' is not an input bus" );
    word_expr e;
    e.name = name;
    if ( cur_.accept( "[" ) )
    {
      const auto& idx = cur_.next();
      e.kind = word_expr::op::bit;
      e.index = parse_uint( idx );
      if ( cur_.peek().text == ":" )
        throw error( errc::unsupported_operator, "line " + std::to_string( line ) + ": part-selects are not supported" );
      cur_.expect( "]" );
      if ( e.index >= it->second )
        throw error( errc::width_mismatch, "line " + std::to_string( line ) + ": bit " + std::to_string( e.index ) +
                                               " is out of range for '" + name + "'" );
      return e;
    }
    e.kind = word_expr::op::bus;
    return e;
  }

  vcursor& cur_;
  const std::map<std::string, std::uint32_t>& inputs_;
};

/* optional `[msb:lsb]` range; lsb must be 0 */
std::uint32_t parse_range( vcursor& cur )
{
  if ( !cur.accept( "[" ) )
    return 1;
  const auto& m = cur.next();
  const auto msb = parse_uint( m );
  cur.expect( ":" );
  const auto lsb = parse_uint( cur.next() );
  cur.expect( "]" );
  if ( lsb != 0 )
    throw error( errc::unsupported_feature, "line " + std::to_string( m.line ) + ": bus ranges must end at bit 0" );
  return msb + 1;
}

} // namespace

word_level_module read_word_level_verilog( std::string_view text )
{
  vcursor cur( detail::lex_verilog( text ) );
  word_level_module m;
  std::map<std::string, std::uint32_t> in_width, out_width;
  auto declare = [&]( bool is_input, std::uint32_t width, const vtoken& at ) {
    const auto& name = at.text;
    if ( in_width.count( name ) || out_width.count( name ) )
      throw parse_error( at.line, "bus '" + name + "' declared twice" );
    ( is_input ? in_width : out_width )[name] = width;
    ( is_input ? m.inputs : m.outputs ).push_back( { name, width } );
  };
  auto declaration = [&]( bool inside_header ) {
    const auto is_input = cur.next().text == "input";
    cur.accept( "wire" );
    const auto width = parse_range( cur );
    do
    {
      if ( cur.peek().type != vtoken::kind::identifier )
        throw parse_error( cur.peek().line, "expected a bus name" );
      declare( is_input, width, cur.next() );
      // inside an ANSI header, a comma may introduce the next declaration
      if ( inside_header && ( cur.peek( 1 ).text == "input" || cur.peek( 1 ).text == "output" ) )
        break;
    } while ( cur.accept( "," ) );
  };

  cur.expect( "module" );
  m.name = cur.identifier();
  std::vector<std::string> header_ports;
  if ( cur.accept( "(" ) && !cur.accept( ")" ) )
  {
    do
    {
      if ( cur.peek().text == "input" || cur.peek().text == "output" )
        declaration( true );
      else
        header_ports.push_back( cur.identifier() );
    } while ( cur.accept( "," ) );
    cur.expect( ")" );
  }
  cur.expect( ";" );

  std::set<std::string> assigned;
  while ( true )
  {
    const auto& t = cur.peek();
    if ( t.type == vtoken::kind::end )
      throw parse_error( t.line, "missing 'endmodule'" );
    if ( cur.accept( "endmodule" ) )
      break;
    if ( t.text == "input" || t.text == "output" )
    {
      declaration( false );
      cur.expect( ";" );
      continue;
    }
    if ( t.text == "wire" || t.text == "reg" || t.text == "always" || t.text == "initial" )
      throw error( errc::unsupported_feature, "line " + std::to_string( t.line ) + ": '" + t.text +
                                                  "' is not supported in word-level modules" );
    if ( cur.accept( "assign" ) )
    {
      const auto line = cur.peek().line;
      const auto target = cur.identifier();
      if ( !out_width.count( target ) )
        throw parse_error( line, "assign target '" + target + "' is not an output bus" );
      if ( !assigned.insert( target ).second )
        throw error( errc::multiple_drivers, "line " + std::to_string( line ) + ": output '" + target + "' is assigned twice" );
      if ( cur.peek().text == "[" )
        throw error( errc::unsupported_feature, "line " + std::to_string( line ) + ": assigning to a bit-select is not supported" );
      cur.expect( "=" );
      expr_parser p( cur, in_width );
      m.assignments.push_back( { target, p.parse() } );
      if ( cur.peek().type == vtoken::kind::symbol && cur.peek().text != ";" )
        throw error( errc::unsupported_operator, "line " + std::to_string( cur.peek().line ) + ": operator '" +
                                                     cur.peek().text + "' is not supported" );
      cur.expect( ";" );
      continue;
    }
    throw parse_error( t.line, "unexpected '" + vcursor::describe( t ) + "'" );
  }
  for ( const auto& p : header_ports )
  {
    if ( !in_width.count( p ) && !out_width.count( p ) )
      throw parse_error( 1, "port '" + p + "' has no input/output declaration" );
  }
  for ( const auto& o : m.outputs )
  {
    if ( !assigned.count( o.name ) )
      throw error( errc::undriven_net, "output '" + o.name + "' is never assigned" );
  }
  // width check against each target
  for ( const auto& a : m.assignments )
  {
    const auto w = out_width.at( a.target );
    std::vector<const word_expr*> stack{ &a.expr };
    while ( !stack.empty() )
    {
      const auto* e = stack.back();
      stack.pop_back();
      const auto nw = e->kind == word_expr::op::bus        ? in_width.at( e->name )
                      : e->kind == word_expr::op::constant ? e->width
                                                           : 0u;
      if ( nw > w )
        throw error( errc::width_mismatch, "operand '" + ( e->name.empty() ? std::to_string( e->value ) : e->name ) +
                                               "' (" + std::to_string( nw ) + " bits) is wider than '" + a.target +
                                               "' (" + std::to_string( w ) + " bits)" );
      for ( const auto& o : e->operands )
        stack.push_back( &o );
    }
  }
  return m;
}

word_level_module read_word_level_verilog_file( const std::filesystem::path& path )
{
  return read_word_level_verilog( read_text_file( path ) );
}

std::uint32_t natural_width( const word_level_module& m, const word_expr& e )
{
  switch ( e.kind )
  {
  case word_expr::op::bus:
    for ( const auto& b : m.inputs )
    {
      if ( b.name == e.name )
        return b.width;
    }
    throw error( errc::invalid_argument, "unknown bus '" + e.name + "'" );
  case word_expr::op::bit: return 1;
  case word_expr::op::constant: return e.width;
  case word_expr::op::not_: return natural_width( m, e.operands[0] );
  case word_expr::op::add:
  case word_expr::op::sub:
    return 1 + std::max( natural_width( m, e.operands[0] ), natural_width( m, e.operands[1] ) );
  case word_expr::op::mul: return natural_width( m, e.operands[0] ) + natural_width( m, e.operands[1] );
  default: return std::max( natural_width( m, e.operands[0] ), natural_width( m, e.operands[1] ) );
  }
}

namespace
{

class blaster
{
public:
  blaster( aig& g, const std::map<std::string, std::vector<literal>>& buses ) : g_( g ), buses_( buses ) {}

  std::vector<literal> eval( const word_expr& e, std::uint32_t w )
  {
    std::vector<literal> r( w, const_false );
    switch ( e.kind )
    {
    case word_expr::op::bus:
    {
      const auto& bits = buses_.at( e.name );
      std::copy_n( bits.begin(), std::min<std::size_t>( w, bits.size() ), r.begin() );
      break;
    }
    case word_expr::op::bit:
      if ( w > 0 )
        r[0] = buses_.at( e.name )[e.index];
      break;
    case word_expr::op::constant:
      for ( std::uint32_t i = 0; i < w && i < 64; ++i )
        r[i] = ( ( e.value >> i ) & 1u ) ? const_true : const_false;
      break;
    case word_expr::op::not_:
    {
      const auto a = eval( e.operands[0], w );
      for ( std::uint32_t i = 0; i < w; ++i )
        r[i] = !a[i];
      break;
    }
    case word_expr::op::and_:
    case word_expr::op::or_:
    case word_expr::op::xor_:
    {
      const auto a = eval( e.operands[0], w );
      const auto b = eval( e.operands[1], w );
      for ( std::uint32_t i = 0; i < w; ++i )
        r[i] = e.kind == word_expr::op::and_ ? g_.create_and( a[i], b[i] )
               : e.kind == word_expr::op::or_ ? g_.create_or( a[i], b[i] )
                                               : half_adder( a[i], b[i] ).first;
      break;
    }
    case word_expr::op::add: r = add( eval( e.operands[0], w ), eval( e.operands[1], w ), const_false ); break;
    case word_expr::op::sub:
    {
      auto b = eval( e.operands[1], w );
      for ( auto& l : b )
        l = !l;
      r = add( eval( e.operands[0], w ), b, const_true );
      break;
    }
    case word_expr::op::mul:
    {
      const auto a = eval( e.operands[0], w );
      const auto b = eval( e.operands[1], w );
      // shift-and-add array; zero partial-product bits fold away
      for ( std::uint32_t j = 0; j < w; ++j )
      {
        std::vector<literal> pp( w, const_false );
        for ( std::uint32_t i = 0; i + j < w; ++i )
          pp[i + j] = g_.create_and( a[i], b[j] );
        r = j == 0 ? pp : add( r, pp, const_false );
      }
      break;
    }
    }
    return r;
  }

private:
  /* sum = AND(!AND(a,b), !AND(!a,!b)) shares AND(a,b) with the carry */
  std::pair<literal, literal> half_adder( literal a, literal b )
  {
    const auto carry = g_.create_and( a, b );
    const auto sum = g_.create_and( !carry, !g_.create_and( !a, !b ) );
    return { sum, carry };
  }

  std::vector<literal> add( const std::vector<literal>& a, const std::vector<literal>& b, literal carry )
  {
    std::vector<literal> r( a.size() );
    for ( std::size_t i = 0; i < a.size(); ++i )
    {
      const auto [s1, c1] = half_adder( a[i], b[i] );
      const auto [s2, c2] = half_adder( s1, carry );
      r[i] = s2;
      if ( i + 1 < a.size() )
        carry = g_.create_or( c1, c2 );
    }
    return r;
  }

  aig& g_;
  const std::map<std::string, std::vector<literal>>& buses_;
};

} // namespace

aig bit_blast( const word_level_module& m )
{
  aig g( m.name );
  std::map<std::string, std::vector<literal>> buses;
  for ( const auto& in : m.inputs )
  {
    auto& bits = buses[in.name];
    for ( std::uint32_t i = 0; i < in.width; ++i )
      bits.push_back( g.create_pi( in.width == 1 ? in.name : in.name + "[" + std::to_string( i ) + "]" ) );
  }
  blaster b( g, buses );
  for ( const auto& out : m.outputs )
  {
    const auto it = std::find_if( m.assignments.begin(), m.assignments.end(),
                                  [&]( const auto& a ) { return a.target == out.name; } );
    if ( it == m.assignments.end() )
      throw error( errc::undriven_net, "output '" + out.name + "' is never assigned" );
    const auto bits = b.eval( it->expr, out.width );
    for ( std::uint32_t i = 0; i < out.width; ++i )
      g.create_po( bits[i], out.width == 1 ? out.name : out.name + "[" + std::to_string( i ) + "]" );
  }
  g.cleanup();
  return g;
}

} // namespace aigkit
