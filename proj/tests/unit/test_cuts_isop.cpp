#include <aigkit/cuts.hpp>
#include <aigkit/isop.hpp>
#include <aigkit/rewrite_library.hpp>
#include <aigkit/npn.hpp>
#include <aigkit/splitmix64.hpp>

#include <gtest/gtest.h>

#include <map>
#include <set>

#include "test_support.hpp"

using namespace aigkit;

namespace
{

/* Value of `root` when the leaves take the bits of `assignment`, evaluated recursively. */
bool eval_over_leaves( const aig& g, node_id root, const std::vector<node_id>& leaves, unsigned assignment )
{
  std::map<node_id, bool> memo;
  for ( std::size_t i = 0; i < leaves.size(); ++i )
    memo[leaves[i]] = ( assignment >> i ) & 1u;
  std::function<bool( node_id )> ev = [&]( node_id n ) -> bool {
    if ( auto it = memo.find( n ); it != memo.end() )
      return it->second;
    if ( n == 0 )
      return false;
    EXPECT_TRUE( g.is_and( n ) ) << "cone escapes its cut at node " << n;
    const auto a = g.fanin0( n ), b = g.fanin1( n );
    const bool v = ( ev( a.node() ) != a.complemented() ) && ( ev( b.node() ) != b.complemented() );
    memo[n] = v;
    return v;
  };
  return ev( root );
}

TEST( Cuts, EveryCutIsFeasibleAndItsTruthTableIsExact )
{
  for ( std::uint64_t seed = 0; seed < 10; ++seed )
  {
    const auto g = test::random_aig( seed, { 6, 40, 3, 0 } );
    const auto cuts = enumerate_cuts( g, 4, 8 );
    g.foreach_and( [&]( node_id n ) {
      const auto& set = cuts[n];
      ASSERT_FALSE( set.empty() );
      EXPECT_TRUE( set[0].is_trivial() );
      EXPECT_LE( set.size(), 8u );
      std::set<std::vector<node_id>> unique;
      for ( const auto& c : set )
      {
        EXPECT_LE( c.leaves.size(), 4u );
        EXPECT_TRUE( std::is_sorted( c.leaves.begin(), c.leaves.end() ) );
        EXPECT_TRUE( unique.insert( c.leaves ).second );
        if ( c.is_trivial() )
          continue;
        const auto tt = cut_truth_table( g, c );
        for ( unsigned m = 0; m < ( 1u << c.leaves.size() ); ++m )
          ASSERT_EQ( tt.get_bit( m ), eval_over_leaves( g, n, c.leaves, m ) );
      }
    } );
  }
}

TEST( Cuts, NoCutDominatesAnother )
{
  const auto g = test::random_aig( 42, { 8, 60, 4, 0 } );
  const auto cuts = enumerate_cuts( g, 5, 12 );
  g.foreach_and( [&]( node_id n ) {
    const auto& set = cuts[n];
    for ( std::size_t i = 1; i < set.size(); ++i )
    {
      for ( std::size_t j = 1; j < set.size(); ++j )
      {
        if ( i == j )
          continue;
        const bool subset = std::includes( set[j].leaves.begin(), set[j].leaves.end(), set[i].leaves.begin(),
                                           set[i].leaves.end() );
        EXPECT_FALSE( subset ) << "cut " << i << " dominates cut " << j << " at node " << n;
      }
    }
  } );
}

TEST( Cuts, CachedEnumeratorMatchesTruthFunctions )
{
  const auto g = test::random_aig( 7, { 6, 40, 3, 0 } );
  cut_enumerator ce( g, { 4, 8, true } );
  g.foreach_and( [&]( node_id n ) {
    for ( const auto& fc : ce.cuts( n ) )
    {
      const auto c = fc.to_cut( n );
      if ( c.is_trivial() )
        continue;
      const auto tt = cut_truth_table( g, c );
      EXPECT_EQ( fc.truth & length_mask( fc.size ), tt.to_uint64() );
    }
  } );
}

TEST( Isop, CoversLieWithinBounds )
{
  splitmix64 rng( 9 );
  for ( int t = 0; t < 200; ++t )
  {
    const std::uint32_t n = 1 + t % 6;
    auto on = truth_table::from_uint64( n, rng.next() );
    on.mask_bits();
    auto dc = truth_table::from_uint64( n, rng.next() & rng.next() );
    dc.mask_bits();
    const auto lower = on & ~dc;
    const auto upper = on | dc;
    const auto cover = isop( lower, upper );
    const auto f = sop_to_truth_table( cover, n );
    EXPECT_EQ( ( lower & ~f ).count_ones(), 0u );
    EXPECT_EQ( ( f & ~upper ).count_ones(), 0u );
  }
}

TEST( Isop, FactoredFormImplementsFunction )
{
  splitmix64 rng( 21 );
  for ( int t = 0; t < 300; ++t )
  {
    const std::uint32_t n = 1 + t % 8;
    auto f = truth_table( n );
    for ( std::size_t w = 0; w < f.num_words(); ++w )
      f.words()[w] = rng.next();
    f.mask_bits();
    const auto s = factor_function( f );
    EXPECT_EQ( s.simulate(), f ) << "vars " << n;
  }
}

TEST( Isop, KnownCovers )
{
  // x0 x1 + x2 is already irredundant
  const auto f = ( truth_table::nth_var( 3, 0 ) & truth_table::nth_var( 3, 1 ) ) | truth_table::nth_var( 3, 2 );
  const auto cover = isop( f );
  EXPECT_EQ( cover.size(), 2u );
  EXPECT_EQ( literal_count( cover ), 3u );
  EXPECT_EQ( factor_function( f ).size(), 2u );
}

TEST( RewriteLibrary, EveryClassHasSoundStructures )
{
  const auto& lib = rewrite_library::instance();
  const auto& table = npn4_table::instance();
  EXPECT_EQ( lib.num_classes(), 222u );
  for ( const auto key : lib.keys() )
  {
    const auto structures = lib.structures( key );
    ASSERT_FALSE( structures.empty() ) << std::hex << key;
    for ( const auto& s : structures )
      EXPECT_EQ( s.simulate().to_uint64(), key ) << std::hex << key << " " << s.to_string();
  }
  for ( const auto r : table.representatives() )
    EXPECT_FALSE( lib.structures( r ).empty() );
}

TEST( RewriteLibrary, KnownMinimalSizes )
{
  const auto& table = npn4_table::instance();
  const auto& lib = rewrite_library::instance();
  auto best = [&]( std::uint16_t f ) {
    std::size_t b = ~std::size_t{ 0 };
    for ( const auto& s : lib.structures( table[f].canonical ) )
      b = std::min( b, s.size() );
    return b;
  };
  EXPECT_EQ( best( 0x8888 ), 1u );  // x0 & x1
  EXPECT_EQ( best( 0x8000 ), 3u );  // AND4
  EXPECT_EQ( best( 0x6666 ), 3u );  // XOR2
  EXPECT_EQ( best( 0x0000 ), 0u );
}

} // namespace
