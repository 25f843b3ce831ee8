#include <aigkit/aig.hpp>
#include <aigkit/errors.hpp>

#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace aigkit;

namespace
{

TEST( Aig, ConstantNodeAndLiterals )
{
  aig g;
  EXPECT_EQ( g.size(), 1u );
  EXPECT_TRUE( g.is_constant( 0 ) );
  const literal l( 5, true );
  EXPECT_EQ( l.node(), 5u );
  EXPECT_TRUE( l.complemented() );
  EXPECT_EQ( ( !l ).complemented(), false );
  EXPECT_EQ( l.regular(), literal( 5, false ) );
  EXPECT_EQ( !const_false, const_true );
}

TEST( Aig, StructuralHashingSharesNodes )
{
  aig g;
  const auto a = g.create_pi();
  const auto b = g.create_pi();
  const auto x = g.create_and( a, b );
  const auto y = g.create_and( b, a );
  EXPECT_EQ( x, y );
  EXPECT_EQ( g.num_live_ands(), 1u );
  EXPECT_EQ( g.find_and( a, b ), x );
  EXPECT_FALSE( g.find_and( a, !b ).has_value() );
}

TEST( Aig, TrivialAndsFold )
{
  aig g;
  const auto a = g.create_pi();
  EXPECT_EQ( g.create_and( a, const_false ), const_false );
  EXPECT_EQ( g.create_and( a, const_true ), a );
  EXPECT_EQ( g.create_and( a, a ), a );
  EXPECT_EQ( g.create_and( a, !a ), const_false );
  EXPECT_EQ( g.num_live_ands(), 0u );
}

TEST( Aig, XorAndMuxFunctions )
{
  aig g;
  const auto a = g.create_pi(), b = g.create_pi(), s = g.create_pi();
  g.create_po( g.create_xor( a, b ) );
  g.create_po( g.create_mux( s, a, b ) );
  for ( unsigned m = 0; m < 8; ++m )
  {
    const bool va = m & 1, vb = m & 2, vs = m & 4;
    const auto out = test::reference_eval( g, { va, vb, vs } );
    EXPECT_EQ( out[0], va != vb );
    EXPECT_EQ( out[1], vs ? va : vb );
  }
}

TEST( Aig, ReplaceCascadesThroughCollapsingFanouts )
{
  aig g;
  const auto a = g.create_pi(), b = g.create_pi(), c = g.create_pi();
  const auto ab = g.create_and( a, b );
  const auto ac = g.create_and( a, c );
  const auto top = g.create_and( ab, ac );
  g.create_po( top );
  // replacing c by b makes ac identical to ab, and top collapses to ab
  g.replace( c.node(), b );
  EXPECT_EQ( g.num_live_ands(), 1u );
  EXPECT_EQ( g.pos()[0].driver, ab );
  EXPECT_TRUE( g.is_dead( ac.node() ) );
  EXPECT_TRUE( g.is_dead( top.node() ) );
}

TEST( Aig, CleanupRemovesDanglingLogic )
{
  aig g;
  const auto a = g.create_pi(), b = g.create_pi();
  const auto used = g.create_and( a, b );
  g.create_and( a, !b );
  g.create_po( used );
  EXPECT_EQ( g.num_live_ands(), 2u );
  EXPECT_EQ( g.cleanup(), 1u );
  EXPECT_EQ( g.num_live_ands(), 1u );
  EXPECT_EQ( and_count( g ), 1u );
}

TEST( Aig, TopoOrderRespectsFanins )
{
  for ( std::uint64_t seed = 0; seed < 20; ++seed )
  {
    const auto g = test::random_aig( seed, { 6, 50, 3, 2 } );
    const auto order = topo_order( g );
    std::vector<int> position( g.size(), -1 );
    for ( std::size_t i = 0; i < order.size(); ++i )
      position[order[i]] = static_cast<int>( i );
    EXPECT_EQ( order[0], 0u );
    for ( const auto n : order )
    {
      if ( !g.is_and( n ) )
        continue;
      EXPECT_LT( position[g.fanin0( n ).node()], position[n] );
      EXPECT_LT( position[g.fanin1( n ).node()], position[n] );
    }
  }
}

TEST( Aig, LevelsAreLongestPaths )
{
  aig g;
  auto x = g.create_pi();
  const auto y = g.create_pi();
  for ( int i = 0; i < 5; ++i )
    x = g.create_and( x, y ^ ( i % 2 == 0 ) );
  g.create_po( x );
  EXPECT_EQ( stats( g ).level, 5u );
  EXPECT_EQ( compute_levels( g )[x.node()], 5u );
  EXPECT_EQ( g.level( x.node() ), 5u );
}

TEST( Aig, SimulationMatchesReferenceEvaluation )
{
  for ( std::uint64_t seed = 0; seed < 30; ++seed )
  {
    const auto g = test::random_aig( seed, { 6, 40, 4, 0 } );
    std::vector<std::uint64_t> pats( g.num_cis() );
    for ( std::size_t i = 0; i < g.num_cis(); ++i )
    {
      for ( unsigned m = 0; m < 64; ++m )
        pats[i] |= static_cast<std::uint64_t>( ( m >> i ) & 1u ) << m;
    }
    const auto words = simulate( g, pats );
    const auto table = test::reference_table( g );
    for ( unsigned m = 0; m < 64; ++m )
    {
      for ( std::size_t o = 0; o < g.num_cos(); ++o )
        ASSERT_EQ( ( ( words[o] >> m ) & 1u ) == 1u, table[m][o] ) << "seed " << seed;
    }
  }
}

TEST( Aig, RebuildIsDenseAndEquivalent )
{
  for ( std::uint64_t seed = 0; seed < 20; ++seed )
  {
    auto g = test::random_aig( seed, { 5, 30, 3, 0 } );
    const auto pi = g.pis()[1];
    g.replace( pi, literal( g.pis()[2], true ) );
    const auto r = rebuild( g );
    for ( node_id n = 0; n < r.size(); ++n )
      EXPECT_FALSE( r.is_dead( n ) );
    EXPECT_EQ( test::reference_table( r ), test::reference_table( g ) );
    EXPECT_EQ( stats( r ).and_count, stats( g ).and_count );
  }
}

TEST( Aig, LatchesAreCisAndCos )
{
  aig g;
  const auto a = g.create_pi( "a" );
  const auto q = g.create_latch( 1, "q" );
  g.set_latch_next( 0, g.create_and( a, q ) );
  g.create_po( q, "out" );
  EXPECT_EQ( g.num_cis(), 2u );
  EXPECT_EQ( g.num_cos(), 2u );
  EXPECT_EQ( g.ci_at( 1 ), q.node() );
  EXPECT_EQ( g.latch_index_of( q.node() ), std::optional<std::size_t>( 0 ) );
  const auto s = stats( g );
  EXPECT_EQ( s.latch_count, 1u );
  EXPECT_EQ( s.and_count, 1u );
}

TEST( Aig, RemoveUnusedLatches )
{
  aig g;
  const auto a = g.create_pi();
  g.create_latch();
  g.set_latch_next( 0, a );
  g.create_po( a );
  EXPECT_EQ( g.remove_unused_latches(), 1u );
  EXPECT_EQ( g.num_latches(), 0u );
}

} // namespace
