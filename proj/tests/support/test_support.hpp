/*
  Helpers shared by the unit and acceptance tests: random networks, a
  reference evaluator that walks the graph one assignment at a time, and
  paths to the fixture files.
*/

#pragma once

#include <aigkit/aig.hpp>
#include <aigkit/augment.hpp>
#include <aigkit/splitmix64.hpp>

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#ifndef AIGKIT_TEST_DATA_DIR
#error "AIGKIT_TEST_DATA_DIR must point at tests/data"
#endif

namespace aigkit::test
{

inline std::filesystem::path data_path( const std::string& file )
{
  return std::filesystem::path( AIGKIT_TEST_DATA_DIR ) / file;
}

struct random_aig_params
{
  std::uint32_t num_pis{ 8 };
  std::uint32_t num_ands{ 40 };
  std::uint32_t num_pos{ 4 };
  std::uint32_t num_latches{ 0 };
  /* probability (percent) that a fanin is drawn from the most recent nodes, which makes deep cones */
  std::uint32_t locality{ 60 };
};

/* Random network; And nodes are created through strash so the count is an upper bound. */
inline aig random_aig( std::uint64_t seed, const random_aig_params& ps = {} )
{
  splitmix64 rng( seed );
  aig g( "random" );
  std::vector<literal> pool;
  for ( std::uint32_t i = 0; i < ps.num_pis; ++i )
    pool.push_back( g.create_pi( "x" + std::to_string( i ) ) );
  for ( std::uint32_t i = 0; i < ps.num_latches; ++i )
    pool.push_back( g.create_latch( static_cast<std::uint8_t>( rng.next() % 2 ), "l" + std::to_string( i ) ) );
  auto pick = [&]() {
    std::size_t idx;
    if ( pool.size() > 6 && rng.next() % 100 < ps.locality )
      idx = pool.size() - 1 - rng.next() % 6;
    else
      idx = rng.next() % pool.size();
    return pool[idx] ^ ( rng.next() % 2 == 1 );
  };
  for ( std::uint32_t i = 0; i < ps.num_ands; ++i )
  {
    const auto a = pick();
    const auto b = pick();
    const auto f = g.create_and( a, b );
    if ( !g.is_constant( f.node() ) && g.is_and( f.node() ) )
      pool.push_back( f.regular() );
  }
  for ( std::uint32_t i = 0; i < ps.num_pos; ++i )
  {
    const auto idx = pool.size() - 1 - ( pool.size() > i ? i : 0 );
    g.create_po( pool[idx] ^ ( rng.next() % 2 == 1 ), "y" + std::to_string( i ) );
  }
  for ( std::uint32_t i = 0; i < ps.num_latches; ++i )
    g.set_latch_next( i, pick() );
  g.cleanup();
  return g;
}

inline aug_config seeded( std::uint64_t seed, bool zero_rw = false, bool zero_rf = false )
{
  aug_config cfg;
  cfg.seed = seed;
  cfg.zero_rw = zero_rw;
  cfg.zero_rf = zero_rf;
  return cfg;
}

/* Reference evaluation of every CO under one CI assignment, by recursive walk. */
inline std::vector<bool> reference_eval( const aig& g, const std::vector<bool>& ci_values )
{
  std::vector<int> value( g.size(), -1 );
  value[0] = 0;
  for ( std::size_t i = 0; i < g.num_cis(); ++i )
    value[g.ci_at( i )] = ci_values[i] ? 1 : 0;
  std::vector<node_id> stack;
  auto eval = [&]( literal l ) {
    stack.push_back( l.node() );
    while ( !stack.empty() )
    {
      const auto n = stack.back();
      if ( value[n] >= 0 )
      {
        stack.pop_back();
        continue;
      }
      const auto a = g.fanin0( n ), b = g.fanin1( n );
      if ( value[a.node()] < 0 )
      {
        stack.push_back( a.node() );
        continue;
      }
      if ( value[b.node()] < 0 )
      {
        stack.push_back( b.node() );
        continue;
      }
      value[n] = ( ( value[a.node()] ^ a.complemented() ) & ( value[b.node()] ^ b.complemented() ) ) ? 1 : 0;
      stack.pop_back();
    }
    return ( value[l.node()] ^ ( l.complemented() ? 1 : 0 ) ) == 1;
  };
  std::vector<bool> out;
  for ( std::size_t i = 0; i < g.num_cos(); ++i )
    out.push_back( eval( g.co_at( i ) ) );
  return out;
}

/* All CO values for all 2^nCI assignments (nCI <= 20), assignment-major. */
inline std::vector<std::vector<bool>> reference_table( const aig& g )
{
  const auto n = g.num_cis();
  std::vector<std::vector<bool>> rows;
  for ( std::uint64_t m = 0; m < ( std::uint64_t{ 1 } << n ); ++m )
  {
    std::vector<bool> in( n );
    for ( std::size_t i = 0; i < n; ++i )
      in[i] = ( m >> i ) & 1u;
    rows.push_back( reference_eval( g, in ) );
  }
  return rows;
}

} // namespace aigkit::test
