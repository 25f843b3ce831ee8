#include <aigkit/errors.hpp>
#include <aigkit/truth_table.hpp>

#include <algorithm>
#include <bit>

namespace aigkit
{

truth_table::truth_table( std::uint32_t num_vars )
    : num_vars_( num_vars ), words_( num_vars <= 6 ? 1u : ( std::size_t{ 1 } << ( num_vars - 6 ) ), 0 )
{
  if ( num_vars > 24 )
    throw error( errc::invalid_argument, "truth tables are limited to 24 variables" );
}

truth_table truth_table::from_uint64( std::uint32_t num_vars, std::uint64_t bits )
{
  truth_table t( num_vars );
  t.words_[0] = bits;
  t.mask_bits();
  return t;
}

truth_table truth_table::nth_var( std::uint32_t num_vars, std::uint32_t var )
{
  truth_table t( num_vars );
  if ( var < 6 )
  {
    std::fill( t.words_.begin(), t.words_.end(), var_masks[var] );
  }
  else
  {
    const std::size_t period = std::size_t{ 1 } << ( var - 6 );
    for ( std::size_t w = 0; w < t.words_.size(); ++w )
      t.words_[w] = ( w / period ) % 2 ? ~0ull : 0ull;
  }
  t.mask_bits();
  return t;
}

truth_table truth_table::constant( std::uint32_t num_vars, bool value )
{
  truth_table t( num_vars );
  if ( value )
  {
    std::fill( t.words_.begin(), t.words_.end(), ~0ull );
    t.mask_bits();
  }
  return t;
}

void truth_table::mask_bits()
{
  if ( num_vars_ < 6 )
    words_[0] &= length_mask( num_vars_ );
}

void truth_table::set_bit( std::uint64_t index, bool value )
{
  const auto m = 1ull << ( index & 63 );
  if ( value )
    words_[index >> 6] |= m;
  else
    words_[index >> 6] &= ~m;
}

bool truth_table::is_const0() const
{
  return std::all_of( words_.begin(), words_.end(), []( auto w ) { return w == 0; } );
}

bool truth_table::is_const1() const
{
  return ( ~*this ).is_const0();
}

std::uint64_t truth_table::count_ones() const
{
  std::uint64_t c = 0;
  for ( const auto w : words_ )
    c += static_cast<std::uint64_t>( std::popcount( w ) );
  return c;
}

truth_table truth_table::cofactor0( std::uint32_t var ) const
{
  truth_table t( *this );
  if ( var < 6 )
  {
    const auto shift = 1u << var;
    for ( auto& w : t.words_ )
      w = ( w & ~var_masks[var] ) | ( ( w & ~var_masks[var] ) << shift );
  }
  else
  {
    const std::size_t step = std::size_t{ 1 } << ( var - 6 );
    for ( std::size_t i = 0; i < t.words_.size(); i += 2 * step )
      std::copy_n( t.words_.begin() + static_cast<std::ptrdiff_t>( i ), step,
                   t.words_.begin() + static_cast<std::ptrdiff_t>( i + step ) );
  }
  t.mask_bits();
  return t;
}

truth_table truth_table::cofactor1( std::uint32_t var ) const
{
  truth_table t( *this );
  if ( var < 6 )
  {
    const auto shift = 1u << var;
    for ( auto& w : t.words_ )
      w = ( w & var_masks[var] ) | ( ( w & var_masks[var] ) >> shift );
  }
  else
  {
    const std::size_t step = std::size_t{ 1 } << ( var - 6 );
    for ( std::size_t i = 0; i < t.words_.size(); i += 2 * step )
      std::copy_n( t.words_.begin() + static_cast<std::ptrdiff_t>( i + step ), step,
                   t.words_.begin() + static_cast<std::ptrdiff_t>( i ) );
  }
  t.mask_bits();
  return t;
}

bool truth_table::depends_on( std::uint32_t var ) const
{
  return cofactor0( var ) != cofactor1( var );
}

truth_table truth_table::operator~() const
{
  truth_table t( *this );
  for ( auto& w : t.words_ )
    w = ~w;
  t.mask_bits();
  return t;
}

truth_table truth_table::operator&( const truth_table& other ) const
{
  truth_table t( *this );
  for ( std::size_t i = 0; i < t.words_.size(); ++i )
    t.words_[i] &= other.words_[i];
  return t;
}

truth_table truth_table::operator|( const truth_table& other ) const
{
  truth_table t( *this );
  for ( std::size_t i = 0; i < t.words_.size(); ++i )
    t.words_[i] |= other.words_[i];
  return t;
}

truth_table truth_table::operator^( const truth_table& other ) const
{
  truth_table t( *this );
  for ( std::size_t i = 0; i < t.words_.size(); ++i )
    t.words_[i] ^= other.words_[i];
  return t;
}

bool truth_table::operator<( const truth_table& other ) const
{
  if ( num_vars_ != other.num_vars_ )
    return num_vars_ < other.num_vars_;
  for ( std::size_t i = words_.size(); i-- > 0; )
  {
    if ( words_[i] != other.words_[i] )
      return words_[i] < other.words_[i];
  }
  return false;
}

std::string truth_table::to_hex() const
{
  static constexpr char digits[] = "0123456789abcdef";
  const std::uint64_t nibbles = std::max<std::uint64_t>( 1, num_bits() / 4 );
  std::string s;
  s.reserve( nibbles );
  for ( std::uint64_t i = nibbles; i-- > 0; )
  {
    const auto word = words_[( i * 4 ) >> 6];
    s.push_back( digits[( word >> ( ( i * 4 ) & 63 ) ) & 0xF] );
  }
  return s;
}

} // namespace aigkit
