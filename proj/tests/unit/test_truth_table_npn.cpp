#include <aigkit/npn.hpp>
#include <aigkit/splitmix64.hpp>
#include <aigkit/truth_table.hpp>

#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <numeric>
#include <set>

using namespace aigkit;

namespace
{

/* Reference: value of a 4-input function after permuting/negating inputs, computed bit by bit. */
std::uint16_t reference_transform( std::uint16_t f, const std::array<int, 4>& perm, unsigned neg, bool out_neg )
{
  std::uint16_t r = 0;
  for ( unsigned x = 0; x < 16; ++x )
  {
    unsigned z = 0;
    for ( int i = 0; i < 4; ++i )
      z |= ( ( ( x >> perm[i] ) & 1u ) ^ ( ( neg >> i ) & 1u ) ) << i;
    const bool v = ( ( f >> z ) & 1u ) != out_neg;
    r |= static_cast<std::uint16_t>( v ) << x;
  }
  return r;
}

TEST( TruthTable, BasicOperations )
{
  const auto a = truth_table::nth_var( 3, 0 );
  const auto b = truth_table::nth_var( 3, 1 );
  EXPECT_EQ( ( a & b ).to_uint64(), 0x88u );
  EXPECT_EQ( ( a | b ).to_uint64(), 0xEEu );
  EXPECT_EQ( ( a ^ b ).to_uint64(), 0x66u );
  EXPECT_EQ( ( ~a ).to_uint64(), 0x55u );
  EXPECT_TRUE( truth_table::constant( 3, false ).is_const0() );
  EXPECT_TRUE( truth_table::constant( 3, true ).is_const1() );
  EXPECT_EQ( ( a & b ).count_ones(), 2u );
  EXPECT_TRUE( ( a & b ).depends_on( 1 ) );
  EXPECT_FALSE( ( a & b ).depends_on( 2 ) );
}

TEST( TruthTable, CofactorsRecompose )
{
  splitmix64 rng( 3 );
  for ( int t = 0; t < 50; ++t )
  {
    const auto f = truth_table::from_uint64( 6, rng.next() );
    for ( std::uint32_t v = 0; v < 6; ++v )
    {
      const auto x = truth_table::nth_var( 6, v );
      EXPECT_EQ( ( x & f.cofactor1( v ) ) | ( ~x & f.cofactor0( v ) ), f );
    }
  }
}

TEST( TruthTable, WideTables )
{
  const auto x7 = truth_table::nth_var( 8, 7 );
  EXPECT_EQ( x7.num_words(), 4u );
  EXPECT_EQ( x7.count_ones(), 128u );
  EXPECT_TRUE( x7.get_bit( 200 ) );
  EXPECT_FALSE( x7.get_bit( 100 ) );
  auto t = truth_table( 8 );
  t.set_bit( 255, true );
  EXPECT_EQ( t, truth_table::nth_var( 8, 0 ) & truth_table::nth_var( 8, 1 ) & truth_table::nth_var( 8, 2 ) &
                    truth_table::nth_var( 8, 3 ) & truth_table::nth_var( 8, 4 ) & truth_table::nth_var( 8, 5 ) &
                    truth_table::nth_var( 8, 6 ) & truth_table::nth_var( 8, 7 ) );
}

TEST( TruthTable, HexString )
{
  EXPECT_EQ( truth_table::from_uint64( 2, 0x8 ).to_hex(), "8" );
  EXPECT_EQ( truth_table::from_uint64( 4, 0x6996 ).to_hex(), "6996" );
}

TEST( Npn, TransformMatchesReference )
{
  splitmix64 rng( 11 );
  for ( int t = 0; t < 500; ++t )
  {
    const auto f = static_cast<std::uint16_t>( rng.next() );
    std::array<int, 4> perm{ 0, 1, 2, 3 };
    std::shuffle( perm.begin(), perm.end(), rng );
    const unsigned neg = rng.next() % 16;
    const bool out_neg = rng.next() % 2;
    npn_transform tr;
    for ( int i = 0; i < 4; ++i )
      tr.perm[i] = static_cast<std::uint8_t>( perm[i] );
    tr.input_neg = static_cast<std::uint8_t>( neg );
    tr.output_neg = out_neg;
    EXPECT_EQ( apply_npn4( f, tr ), reference_transform( f, perm, neg, out_neg ) );
    const auto tt = truth_table::from_uint64( 4, f );
    EXPECT_EQ( apply_npn_transform( tt, tr ).to_uint64(), reference_transform( f, perm, neg, out_neg ) );
    EXPECT_EQ( apply_npn_transform( apply_npn_transform( tt, tr ), inverse( tr, 4 ) ), tt );
  }
}

TEST( Npn, CanonicalFormIsInvariantAndReproducesInput )
{
  splitmix64 rng( 5 );
  for ( int t = 0; t < 300; ++t )
  {
    const auto f = static_cast<std::uint16_t>( rng.next() );
    const auto cls = npn_canonicalize( truth_table::from_uint64( 4, f ) );
    EXPECT_EQ( apply_npn_transform( cls.canonical, cls.transform ).to_uint64(), f );
    std::array<int, 4> perm{ 0, 1, 2, 3 };
    std::shuffle( perm.begin(), perm.end(), rng );
    const auto g = reference_transform( f, perm, rng.next() % 16, rng.next() % 2 );
    EXPECT_EQ( npn_canonicalize( truth_table::from_uint64( 4, g ) ).canonical, cls.canonical );
  }
}

TEST( Npn, SmallerArities )
{
  // AND2 and OR2 are one class; XOR2 is another
  const auto and2 = npn_canonicalize( truth_table::from_uint64( 2, 0x8 ) ).canonical;
  const auto or2 = npn_canonicalize( truth_table::from_uint64( 2, 0xE ) ).canonical;
  const auto xor2 = npn_canonicalize( truth_table::from_uint64( 2, 0x6 ) ).canonical;
  EXPECT_EQ( and2, or2 );
  EXPECT_NE( and2, xor2 );
}

TEST( Npn, LookupTableAgreesWithOrbitCount )
{
  // independent orbit count by union over all 768 transforms
  std::vector<int> seen( 65536, 0 );
  std::array<int, 4> perm{ 0, 1, 2, 3 };
  std::vector<std::array<int, 4>> perms;
  do
    perms.push_back( perm );
  while ( std::next_permutation( perm.begin(), perm.end() ) );
  std::size_t orbits = 0;
  for ( unsigned f = 0; f < 65536; ++f )
  {
    if ( seen[f] )
      continue;
    ++orbits;
    std::vector<unsigned> stack{ f };
    seen[f] = 1;
    while ( !stack.empty() )
    {
      const auto h = stack.back();
      stack.pop_back();
      // generators: swap of adjacent inputs, negation of input 0, output negation
      for ( int i = 0; i < 3; ++i )
      {
        std::array<int, 4> p{ 0, 1, 2, 3 };
        std::swap( p[i], p[i + 1] );
        const auto n = reference_transform( static_cast<std::uint16_t>( h ), p, 0, false );
        if ( !seen[n] )
          seen[n] = 1, stack.push_back( n );
      }
      for ( const auto& [neg, on] : { std::pair{ 1u, false }, std::pair{ 0u, true } } )
      {
        const auto n = reference_transform( static_cast<std::uint16_t>( h ), { 0, 1, 2, 3 }, neg, on );
        if ( !seen[n] )
          seen[n] = 1, stack.push_back( n );
      }
    }
  }
  EXPECT_EQ( orbits, 222u );
  const auto& table = npn4_table::instance();
  EXPECT_EQ( table.num_classes(), 222u );
  for ( unsigned f = 0; f < 65536; f += 97 )
    EXPECT_EQ( apply_npn4( table[static_cast<std::uint16_t>( f )].canonical, table[static_cast<std::uint16_t>( f )].transform ), f );
}

} // namespace
