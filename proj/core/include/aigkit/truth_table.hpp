#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace aigkit
{

/*! \brief Truth table over `num_vars` variables stored in 64-bit words.

  Bit i holds the function value for the assignment whose binary expansion
  is i (variable 0 is the least significant). Tables with fewer than six
  variables keep the unused high bits of their single word at zero.
*/
class truth_table
{
public:
  truth_table() : truth_table( 0u ) {}
  explicit truth_table( std::uint32_t num_vars );

  static truth_table from_uint64( std::uint32_t num_vars, std::uint64_t bits );
  static truth_table nth_var( std::uint32_t num_vars, std::uint32_t var );
  static truth_table constant( std::uint32_t num_vars, bool value );

  std::uint32_t num_vars() const { return num_vars_; }
  std::uint64_t num_bits() const { return std::uint64_t{ 1 } << num_vars_; }
  std::size_t num_words() const { return words_.size(); }
  const std::vector<std::uint64_t>& words() const { return words_; }
  std::vector<std::uint64_t>& words() { return words_; }

  /*! \brief Low 64 bits; the whole table when num_vars <= 6. */
  std::uint64_t to_uint64() const { return words_[0]; }

  bool get_bit( std::uint64_t index ) const { return ( words_[index >> 6] >> ( index & 63 ) ) & 1u; }
  void set_bit( std::uint64_t index, bool value );

  bool is_const0() const;
  bool is_const1() const;
  std::uint64_t count_ones() const;
  bool depends_on( std::uint32_t var ) const;

  truth_table cofactor0( std::uint32_t var ) const;
  truth_table cofactor1( std::uint32_t var ) const;

  truth_table operator~() const;
  truth_table operator&( const truth_table& other ) const;
  truth_table operator|( const truth_table& other ) const;
  truth_table operator^( const truth_table& other ) const;

  bool operator==( const truth_table& other ) const = default;
  bool operator<( const truth_table& other ) const;

  /*! \brief Hex string, most significant nibble first. */
  std::string to_hex() const;

  void mask_bits();

private:
  std::uint32_t num_vars_;
  std::vector<std::uint64_t> words_;
};

/*! \brief Projection masks for variables 0..5 within one word. */
inline constexpr std::uint64_t var_masks[6] = {
    0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull, 0xF0F0F0F0F0F0F0F0ull,
    0xFF00FF00FF00FF00ull, 0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull };

/*! \brief Mask of the valid bits of a single-word table with n <= 6 vars. */
constexpr std::uint64_t length_mask( std::uint32_t num_vars )
{
  return num_vars >= 6 ? ~0ull : ( ( 1ull << ( 1u << num_vars ) ) - 1 );
}

} // namespace aigkit
