#include <aigkit/aiger.hpp>
#include <aigkit/cell_library.hpp>
#include <aigkit/errors.hpp>

#include <sstream>

namespace aigkit
{

namespace
{

truth_table eval( const cell_expr& e, std::uint32_t n )
{
  switch ( e.kind )
  {
  case cell_expr::op::constant:
    return truth_table::constant( n, e.index != 0 );
  case cell_expr::op::pin:
    return truth_table::nth_var( n, e.index );
  case cell_expr::op::not_:
    return ~eval( e.operands[0], n );
  default:
    break;
  }
  auto acc = eval( e.operands[0], n );
  for ( std::size_t k = 1; k < e.operands.size(); ++k )
  {
    const auto t = eval( e.operands[k], n );
    acc = e.kind == cell_expr::op::and_ ? ( acc & t ) : e.kind == cell_expr::op::or_ ? ( acc | t ) : ( acc ^ t );
  }
  return acc;
}

literal build_expr( aig& g, const cell_expr& e, std::span<const literal> pins )
{
  switch ( e.kind )
  {
  case cell_expr::op::constant:
    return e.index ? const_true : const_false;
  case cell_expr::op::pin:
    return pins[e.index];
  case cell_expr::op::not_:
    return !build_expr( g, e.operands[0], pins );
  default:
    break;
  }
  auto acc = build_expr( g, e.operands[0], pins );
  for ( std::size_t k = 1; k < e.operands.size(); ++k )
  {
    const auto t = build_expr( g, e.operands[k], pins );
    acc = e.kind == cell_expr::op::and_ ? g.create_and( acc, t )
          : e.kind == cell_expr::op::or_ ? g.create_or( acc, t )
                                         : g.create_xor( acc, t );
  }
  return acc;
}

class expr_parser
{
public:
  expr_parser( const std::vector<std::string>& tokens, const std::vector<std::string>& pins, std::size_t line )
      : tokens_( tokens ), pins_( pins ), line_( line ) {}

  cell_expr parse()
  {
    auto e = parse_one();
    if ( pos_ != tokens_.size() )
      throw parse_error( line_, "unexpected '" + tokens_[pos_] + "' after the function" );
    return e;
  }

private:
  cell_expr parse_one()
  {
    if ( pos_ >= tokens_.size() )
      throw parse_error( line_, "incomplete function expression" );
    const auto& t = tokens_[pos_++];
    if ( t == "(" )
    {
      if ( pos_ >= tokens_.size() )
        throw parse_error( line_, "incomplete function expression" );
      const auto op = tokens_[pos_++];
      cell_expr e;
      if ( op == "NOT" )
        e.kind = cell_expr::op::not_;
      else if ( op == "AND" )
        e.kind = cell_expr::op::and_;
      else if ( op == "OR" )
        e.kind = cell_expr::op::or_;
      else if ( op == "XOR" )
        e.kind = cell_expr::op::xor_;
      else
        throw parse_error( line_, "unknown operator '" + op + "'" );
      while ( pos_ < tokens_.size() && tokens_[pos_] != ")" )
        e.operands.push_back( parse_one() );
      if ( pos_ >= tokens_.size() )
        throw parse_error( line_, "missing ')' in function expression" );
      ++pos_;
      if ( e.kind == cell_expr::op::not_ ? e.operands.size() != 1 : e.operands.size() < 2 )
        throw parse_error( line_, "wrong number of operands for " + op );
      return e;
    }
    if ( t == ")" )
      throw parse_error( line_, "unexpected ')'" );
    cell_expr e;
    if ( t == "0" || t == "1" )
    {
      e.kind = cell_expr::op::constant;
      e.index = t == "1";
      return e;
    }
    for ( std::size_t i = 0; i < pins_.size(); ++i )
    {
      if ( pins_[i] == t )
      {
        e.kind = cell_expr::op::pin;
        e.index = static_cast<std::uint32_t>( i );
        return e;
      }
    }
    throw parse_error( line_, "function references undeclared pin '" + t + "'" );
  }

  const std::vector<std::string>& tokens_;
  const std::vector<std::string>& pins_;
  std::size_t line_;
  std::size_t pos_{ 0 };
};

std::vector<std::string> tokenize( std::string_view s )
{
  std::vector<std::string> out;
  std::string cur;
  for ( const char c : s )
  {
    if ( c == '(' || c == ')' || c == ' ' || c == '\t' )
    {
      if ( !cur.empty() )
        out.push_back( std::move( cur ) );
      cur.clear();
      if ( c == '(' || c == ')' )
        out.emplace_back( 1, c );
    }
    else
      cur.push_back( c );
  }
  if ( !cur.empty() )
    out.push_back( cur );
  return out;
}

} // namespace

truth_table cell::truth() const
{
  return eval( function, static_cast<std::uint32_t>( inputs.size() ) );
}

literal cell::build( aig& g, std::span<const literal> pins ) const
{
  return build_expr( g, function, pins );
}

const cell* cell_library::find( std::string_view name ) const
{
  auto it = index_.find( name );
  return it == index_.end() ? nullptr : &cells_[it->second];
}

std::size_t cell_library::num_multi_output() const
{
  std::size_t n = 0;
  for ( const auto& c : cells_ )
    n += c.is_multi_output() ? 1 : 0;
  return n;
}

void cell_library::add( cell c )
{
  if ( index_.count( c.name ) )
    throw error( errc::duplicate_cell, "duplicate cell '" + c.name + "'" );
  index_.emplace( c.name, cells_.size() );
  cells_.push_back( std::move( c ) );
}

cell_library read_cell_library( std::string_view text )
{
  cell_library lib;
  std::size_t pos = 0, line_no = 0;
  while ( pos < text.size() )
  {
    auto end = text.find( '\n', pos );
    if ( end == std::string_view::npos )
      end = text.size();
    auto line = text.substr( pos, end - pos );
    pos = end + 1;
    ++line_no;
    if ( !line.empty() && line.back() == '\r' )
      line.remove_suffix( 1 );
    const auto first = line.find_first_not_of( " \t" );
    if ( first == std::string_view::npos || line[first] == '#' )
      continue;
    const auto tokens = tokenize( line );
    std::size_t k = 0;
    auto expect = [&]( const char* kw ) {
      if ( k >= tokens.size() || tokens[k] != kw )
        throw parse_error( line_no, std::string( "expected '" ) + kw + "'" );
      ++k;
    };
    expect( "cell" );
    if ( k >= tokens.size() )
      throw parse_error( line_no, "missing cell name" );
    cell c;
    c.name = tokens[k++];
    expect( "inputs" );
    while ( k < tokens.size() && tokens[k] != "output" && tokens[k] != "outputs" )
      c.inputs.push_back( tokens[k++] );
    if ( k >= tokens.size() )
      throw parse_error( line_no, "expected 'output'" );
    ++k;
    while ( k < tokens.size() && tokens[k] != "function" )
      c.outputs.push_back( tokens[k++] );
    if ( c.outputs.empty() )
      throw parse_error( line_no, "cell '" + c.name + "' declares no output pin" );
    if ( c.inputs.size() > 16 )
      throw parse_error( line_no, "cells are limited to 16 inputs" );
    expect( "function" );
    const std::vector<std::string> rest( tokens.begin() + static_cast<std::ptrdiff_t>( k ), tokens.end() );
    for ( const auto& t : rest )
      c.function_text += ( c.function_text.empty() || t == ")" || c.function_text.back() == '(' ? "" : " " ) + t;
    if ( rest.empty() )
      throw parse_error( line_no, "missing function expression" );
    if ( !c.is_multi_output() )
      c.function = expr_parser( rest, c.inputs, line_no ).parse();
    try
    {
      lib.add( std::move( c ) );
    }
    catch ( const error& e )
    {
      throw error( e.code(), "line " + std::to_string( line_no ) + ": " + e.what() );
    }
  }
  return lib;
}

cell_library read_cell_library_file( const std::filesystem::path& path )
{
  return read_cell_library( read_text_file( path ) );
}

} // namespace aigkit
