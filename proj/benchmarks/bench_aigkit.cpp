#include <aigkit/aiger.hpp>
#include <aigkit/augment.hpp>
#include <aigkit/cuts.hpp>
#include <aigkit/edgelist.hpp>
#include <aigkit/equivalence.hpp>
#include <aigkit/lut_map.hpp>
#include <aigkit/npn.hpp>
#include <aigkit/rewrite_library.hpp>
#include <aigkit/sat_solver.hpp>
#include <aigkit/splitmix64.hpp>

#include <benchmark/benchmark.h>

#include <map>
#include <string>

using namespace aigkit;

namespace
{

const std::vector<std::string> designs{ "c432", "c880", "c2670", "c5315", "c7552" };

const aig& design( std::size_t index )
{
  static std::map<std::size_t, aig> cache;
  auto it = cache.find( index );
  if ( it == cache.end() )
    it = cache.emplace( index, read_aiger_file( std::string( AIGKIT_BENCH_DATA_DIR ) + "/" + designs[index] + ".aag" ) ).first;
  return it->second;
}

void set_design_label( benchmark::State& state )
{
  state.SetLabel( designs[static_cast<std::size_t>( state.range( 0 ) )] );
}

void BM_NpnCanonicalize( benchmark::State& state )
{
  splitmix64 rng( 1 );
  for ( auto _ : state )
  {
    const auto tt = truth_table::from_uint64( 4, rng.next() & 0xFFFF );
    benchmark::DoNotOptimize( npn_canonicalize( tt ) );
  }
}
BENCHMARK( BM_NpnCanonicalize );

void BM_CutEnumeration( benchmark::State& state )
{
  const auto& g = design( static_cast<std::size_t>( state.range( 0 ) ) );
  for ( auto _ : state )
    benchmark::DoNotOptimize( enumerate_cuts( g, 4, 8 ) );
  set_design_label( state );
}
BENCHMARK( BM_CutEnumeration )->DenseRange( 0, 4 )->Unit( benchmark::kMillisecond );

void BM_Augment( benchmark::State& state )
{
  (void)rewrite_library::instance();
  const auto& g = design( static_cast<std::size_t>( state.range( 0 ) ) );
  std::uint64_t seed = 0;
  for ( auto _ : state )
  {
    aug_config cfg;
    cfg.seed = seed++;
    benchmark::DoNotOptimize( aig_augment( g, cfg ) );
  }
  set_design_label( state );
  state.counters["ands"] = static_cast<double>( and_count( g ) );
}
BENCHMARK( BM_Augment )->DenseRange( 0, 4 )->Unit( benchmark::kMillisecond );

void BM_Cec( benchmark::State& state )
{
  const auto& g = design( static_cast<std::size_t>( state.range( 0 ) ) );
  aug_config cfg;
  cfg.seed = 1;
  const auto h = aig_augment( g, cfg ).network;
  for ( auto _ : state )
    benchmark::DoNotOptimize( cec( g, h ) );
  set_design_label( state );
}
BENCHMARK( BM_Cec )->DenseRange( 0, 4 )->Unit( benchmark::kMillisecond );

void BM_KlutMap( benchmark::State& state )
{
  const auto& g = design( static_cast<std::size_t>( state.range( 0 ) ) );
  for ( auto _ : state )
    benchmark::DoNotOptimize( klut_map( g, 4 ) );
  set_design_label( state );
}
BENCHMARK( BM_KlutMap )->DenseRange( 0, 4 )->Unit( benchmark::kMillisecond );

void BM_WriteEdgelist( benchmark::State& state )
{
  const auto& g = design( static_cast<std::size_t>( state.range( 0 ) ) );
  for ( auto _ : state )
    benchmark::DoNotOptimize( write_edgelist_aig( g ) );
  set_design_label( state );
}
BENCHMARK( BM_WriteEdgelist )->DenseRange( 0, 4 )->Unit( benchmark::kMicrosecond );

void BM_SatRandom3Cnf( benchmark::State& state )
{
  const auto vars = static_cast<std::uint32_t>( state.range( 0 ) );
  splitmix64 rng( 7 );
  std::vector<cnf_formula> formulas;
  for ( int i = 0; i < 16; ++i )
  {
    cnf_formula f;
    f.num_vars = vars;
    for ( std::uint32_t c = 0; c < vars * 426 / 100; ++c )
    {
      std::vector<int> cl;
      for ( int k = 0; k < 3; ++k )
      {
        const int v = 1 + static_cast<int>( rng.next() % vars );
        cl.push_back( rng.next() % 2 ? v : -v );
      }
      f.add_clause( cl );
    }
    formulas.push_back( std::move( f ) );
  }
  std::size_t i = 0;
  for ( auto _ : state )
    benchmark::DoNotOptimize( sat_solve( formulas[i++ % formulas.size()] ) );
}
BENCHMARK( BM_SatRandom3Cnf )->Arg( 50 )->Arg( 100 )->Arg( 150 )->Unit( benchmark::kMillisecond );

} // namespace

BENCHMARK_MAIN();
