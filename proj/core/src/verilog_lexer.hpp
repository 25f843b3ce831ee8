/* Tokenizer shared by the structural and word-level Verilog readers. */

#pragma once

#include <aigkit/errors.hpp>

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

namespace aigkit::detail
{

struct vtoken
{
  enum class kind
  {
    identifier,
    number,
    symbol,
    end
  };
  kind type{ kind::end };
  std::string text;
  std::size_t line{ 0 };
};

inline std::vector<vtoken> lex_verilog( std::string_view s )
{
  std::vector<vtoken> out;
  std::size_t i = 0, line = 1;
  while ( i < s.size() )
  {
    const char c = s[i];
    if ( c == '\n' )
    {
      ++line;
      ++i;
      continue;
    }
    if ( std::isspace( static_cast<unsigned char>( c ) ) )
    {
      ++i;
      continue;
    }
    if ( c == '/' && i + 1 < s.size() && s[i + 1] == '/' )
    {
      while ( i < s.size() && s[i] != '\n' )
        ++i;
      continue;
    }
    if ( c == '/' && i + 1 < s.size() && s[i + 1] == '*' )
    {
      const auto start = line;
      i += 2;
      while ( i + 1 < s.size() && !( s[i] == '*' && s[i + 1] == '/' ) )
      {
        if ( s[i] == '\n' )
          ++line;
        ++i;
      }
      if ( i + 1 >= s.size() )
        throw parse_error( start, "unterminated block comment" );
      i += 2;
      continue;
    }
    if ( c == '`' )
      throw error( errc::unsupported_feature, "line " + std::to_string( line ) + ": compiler directives are not supported" );
    if ( c == '\\' )
    {
      // escaped identifier: runs to the next whitespace
      auto j = i + 1;
      while ( j < s.size() && !std::isspace( static_cast<unsigned char>( s[j] ) ) )
        ++j;
      out.push_back( { vtoken::kind::identifier, std::string( s.substr( i + 1, j - i - 1 ) ), line } );
      i = j;
      continue;
    }
    if ( std::isalpha( static_cast<unsigned char>( c ) ) || c == '_' )
    {
      auto j = i + 1;
      while ( j < s.size() && ( std::isalnum( static_cast<unsigned char>( s[j] ) ) || s[j] == '_' || s[j] == '$' ) )
        ++j;
      out.push_back( { vtoken::kind::identifier, std::string( s.substr( i, j - i ) ), line } );
      i = j;
      continue;
    }
    if ( std::isdigit( static_cast<unsigned char>( c ) ) )
    {
      auto j = i + 1;
      while ( j < s.size() && ( std::isalnum( static_cast<unsigned char>( s[j] ) ) || s[j] == '\'' || s[j] == '_' ) )
        ++j;
      out.push_back( { vtoken::kind::number, std::string( s.substr( i, j - i ) ), line } );
      i = j;
      continue;
    }
    out.push_back( { vtoken::kind::symbol, std::string( 1, c ), line } );
    ++i;
  }
  out.push_back( { vtoken::kind::end, "", line } );
  return out;
}

/* cursor over a token stream with error helpers */
class vcursor
{
public:
  explicit vcursor( std::vector<vtoken> tokens ) : t_( std::move( tokens ) ) {}

  const vtoken& peek( std::size_t ahead = 0 ) const { return t_[std::min( p_ + ahead, t_.size() - 1 )]; }
  const vtoken& next()
  {
    const auto& t = t_[p_];
    if ( p_ + 1 < t_.size() )
      ++p_;
    return t;
  }
  bool accept( std::string_view text )
  {
    if ( peek().type != vtoken::kind::end && peek().text == text )
    {
      next();
      return true;
    }
    return false;
  }
  void expect( std::string_view text )
  {
    if ( !accept( text ) )
      throw parse_error( peek().line, "expected '" + std::string( text ) + "' but found '" + describe( peek() ) + "'" );
  }
  std::string identifier()
  {
    if ( peek().type != vtoken::kind::identifier )
      throw parse_error( peek().line, "expected an identifier but found '" + describe( peek() ) + "'" );
    return next().text;
  }
  static std::string describe( const vtoken& t ) { return t.type == vtoken::kind::end ? "end of file" : t.text; }

private:
  std::vector<vtoken> t_;
  std::size_t p_{ 0 };
};

} // namespace aigkit::detail
