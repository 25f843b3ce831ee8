#include <aigkit/aiger.hpp>
#include <aigkit/cuts.hpp>
#include <aigkit/equivalence.hpp>
#include <aigkit/errors.hpp>
#include <aigkit/lut_map.hpp>
#include <aigkit/retime.hpp>
#include <aigkit/word_level.hpp>

#include <gtest/gtest.h>

#include <functional>
#include <map>

#include "test_support.hpp"

using namespace aigkit;

namespace
{

/* Evaluates COs using only the LUT cover: each LUT computes its cut function over its leaves. */
std::vector<bool> eval_cover( const aig& g, const lut_mapping& m, const std::vector<bool>& ci_values )
{
  std::map<node_id, bool> value{ { 0, false } };
  for ( std::size_t i = 0; i < g.num_cis(); ++i )
    value[g.ci_at( i )] = ci_values[i];
  std::map<node_id, truth_table> functions;
  for ( const auto& [root, leaves] : m.cover )
    functions.emplace( root, cone_truth_table( g, root, leaves ) );
  std::function<bool( node_id )> ev = [&]( node_id n ) -> bool {
    if ( auto it = value.find( n ); it != value.end() )
      return it->second;
    const auto it = m.cover.find( n );
    if ( it == m.cover.end() )
      throw std::runtime_error( "node " + std::to_string( n ) + " is neither a CI nor a LUT root" );
    std::uint64_t index = 0;
    for ( std::size_t i = 0; i < it->second.size(); ++i )
      index |= std::uint64_t( ev( it->second[i] ) ) << i;
    const bool v = functions.at( n ).get_bit( index );
    value[n] = v;
    return v;
  };
  std::vector<bool> out;
  for ( std::size_t i = 0; i < g.num_cos(); ++i )
  {
    const auto l = g.co_at( i );
    out.push_back( ev( l.node() ) != l.complemented() );
  }
  return out;
}

TEST( LutMap, SingleAnd )
{
  aig g;
  g.create_po( g.create_and( g.create_pi(), g.create_pi() ) );
  const auto m = klut_map( g, 4 );
  EXPECT_EQ( m.lut_count, 1u );
  EXPECT_EQ( m.lut_depth, 1u );
}

TEST( LutMap, Mult2b )
{
  const auto g = bit_blast( read_word_level_verilog_file( test::data_path( "mult2b.v" ) ) );
  const auto m = klut_map( g, 4 );
  EXPECT_EQ( m.lut_count, 4u );
  EXPECT_EQ( m.lut_depth, 1u );
}

TEST( LutMap, ChainNeedsExpectedDepth )
{
  // an AND of 16 inputs as a balanced tree: depth 2 with 4-LUTs, 5 LUTs
  aig g;
  std::vector<literal> layer;
  for ( int i = 0; i < 16; ++i )
    layer.push_back( g.create_pi() );
  while ( layer.size() > 1 )
  {
    std::vector<literal> next;
    for ( std::size_t i = 0; i + 1 < layer.size(); i += 2 )
      next.push_back( g.create_and( layer[i], layer[i + 1] ) );
    layer = next;
  }
  g.create_po( layer[0] );
  const auto m = klut_map( g, 4 );
  EXPECT_EQ( m.lut_depth, 2u );
  EXPECT_EQ( m.lut_count, 5u );
  EXPECT_EQ( klut_map( g, 2 ).lut_depth, 4u );
  EXPECT_EQ( klut_map( g, 2 ).lut_count, 15u );
}

TEST( LutMap, CoverRecomposesNetworkFunction )
{
  for ( std::uint64_t seed = 0; seed < 25; ++seed )
  {
    const auto g = test::random_aig( seed, { 9, 70, 4, 0 } );
    for ( const std::uint32_t k : { 3u, 4u, 6u } )
    {
      const auto m = klut_map( g, k );
      EXPECT_EQ( m.lut_count, m.cover.size() );
      for ( const auto& [root, leaves] : m.cover )
        EXPECT_LE( leaves.size(), k );
      splitmix64 rng( seed );
      for ( int t = 0; t < 64; ++t )
      {
        std::vector<bool> in( g.num_cis() );
        for ( std::size_t i = 0; i < in.size(); ++i )
          in[i] = rng.next() & 1u;
        ASSERT_EQ( eval_cover( g, m, in ), test::reference_eval( g, in ) ) << "seed " << seed << " k " << k;
      }
    }
  }
}

TEST( LutMap, RejectsBadLutSize )
{
  aig g;
  g.create_po( g.create_pi() );
  EXPECT_THROW( klut_map( g, 1 ), error );
  EXPECT_THROW( klut_map( g, 7 ), error );
  EXPECT_EQ( klut_map( g, 4 ).lut_count, 0u );
}

TEST( Retime, CombinationalNetworkIsRejected )
{
  aig g;
  g.create_po( g.create_pi() );
  try
  {
    retime_augment( g, {} );
    FAIL();
  }
  catch ( const error& e )
  {
    EXPECT_EQ( e.code(), errc::no_latches );
  }
}

TEST( Retime, ForwardMoveMergesLatches )
{
  aig g;
  const auto a = g.create_pi( "a" ), b = g.create_pi( "b" );
  const auto qa = g.create_latch( 1 ), qb = g.create_latch( 1 );
  g.set_latch_next( 0, a );
  g.set_latch_next( 1, b );
  const auto y = g.create_and( qa, !qb );
  g.create_po( y, "y" );
  const auto moves = feasible_moves( g );
  ASSERT_FALSE( moves.empty() );
  EXPECT_EQ( moves[0].direction, retime_direction::forward );
  auto h = g;
  apply_move( h, moves[0] );
  EXPECT_EQ( h.num_latches(), 1u );
  EXPECT_EQ( h.latches()[0].init, 0u );  // 1 & !1
  EXPECT_TRUE( bounded_seq_equiv( g, h ).equivalent );
}

TEST( Retime, BackwardMoveSplitsLatch )
{
  aig g;
  const auto a = g.create_pi( "a" ), b = g.create_pi( "b" );
  const auto q = g.create_latch( 0 );
  g.set_latch_next( 0, g.create_and( a, b ) );
  g.create_po( q, "y" );
  const auto moves = feasible_moves( g );
  ASSERT_EQ( moves.size(), 1u );
  EXPECT_EQ( moves[0].direction, retime_direction::backward );
  auto h = g;
  apply_move( h, moves[0] );
  EXPECT_EQ( h.num_latches(), 2u );
  const auto r = bounded_seq_equiv( g, h );
  EXPECT_TRUE( r.equivalent );
  EXPECT_TRUE( r.exhaustive );
}

TEST( Retime, RandomSequencesPreserveBehaviour )
{
  const auto s27 = read_aiger_file( test::data_path( "s27.aag" ) );
  for ( std::uint64_t seed = 0; seed < 10; ++seed )
  {
    const auto r = retime_augment( s27, { seed, 6 } );
    EXPECT_TRUE( bounded_seq_equiv( s27, r ).equivalent ) << "seed " << seed;
  }
  for ( std::uint64_t seed = 0; seed < 10; ++seed )
  {
    const auto g = test::random_aig( seed, { 3, 20, 2, 4 } );
    const auto r = retime_augment( g, { seed, 10 } );
    EXPECT_TRUE( bounded_seq_equiv( g, r ).equivalent ) << "seed " << seed;
  }
}

TEST( Retime, Deterministic )
{
  const auto s27 = read_aiger_file( test::data_path( "s27.aag" ) );
  EXPECT_EQ( write_aiger( retime_augment( s27, { 4, 10 } ) ), write_aiger( retime_augment( s27, { 4, 10 } ) ) );
}

} // namespace
