#include <aigkit/aiger.hpp>
#include <aigkit/augment.hpp>
#include <aigkit/cuts.hpp>
#include <aigkit/errors.hpp>
#include <aigkit/opt_passes.hpp>
#include <aigkit/splitmix64.hpp>

#include <array>
#include <sstream>

namespace aigkit
{

bool is_transformable( const aig& g, node_id v, decision d, bool zero_rw, bool zero_rf )
{
  if ( v >= g.size() || !g.is_and( v ) || g.is_dead( v ) )
    return false;
  switch ( d )
  {
  case decision::rewrite: return rewrite_check( g, v, zero_rw ).has_value();
  case decision::refactor: return refactor_check( g, v, zero_rf ).has_value();
  case decision::resub: return resub_check( g, v ).has_value();
  default: return false;
  }
}

aug_result aig_augment( const aig& input, const aug_config& cfg )
{
  aug_result result{ input, {} };
  auto& g = result.network;
  g.cleanup();

  std::vector<node_id> snapshot;
  for ( const auto n : topo_order( g ) )
  {
    if ( g.is_and( n ) )
      snapshot.push_back( n );
  }

  cut_enumerator cuts( g, cut_params{ 4, 8, true } );
  splitmix64 rng( cfg.seed );
  for ( const auto v : snapshot )
  {
    if ( g.is_dead( v ) )
      continue;
    std::array<std::optional<replacement_candidate>, 4> found;
    found[1] = rewrite_check( g, v, cfg.zero_rw, &cuts );
    found[2] = refactor_check( g, v, cfg.zero_rf );
    found[3] = resub_check( g, v );

    decision_record rec;
    rec.node = v;
    rec.available.push_back( 0 );
    for ( std::uint8_t code = 1; code <= 3; ++code )
    {
      if ( found[code] )
        rec.available.push_back( code );
    }
    rec.selected = rec.available[rng.next() % rec.available.size()];
    if ( rec.selected != 0 )
    {
      const auto before = static_cast<std::int64_t>( g.num_live_ands() );
      apply_candidate( g, *found[rec.selected] );
      cuts.invalidate_tfo( g.last_touched() );
      g.cleanup();
      rec.gain = before - static_cast<std::int64_t>( g.num_live_ands() );
    }
    result.log.push_back( std::move( rec ) );
  }
  if ( cfg.log_path )
    write_decision_log( result.log, *cfg.log_path );
  return result;
}

std::string decision_log_csv( const decision_log& log )
{
  std::ostringstream os;
  os << "node,available,selected,gain\n";
  for ( const auto& r : log )
  {
    os << r.node << ',';
    for ( std::size_t i = 0; i < r.available.size(); ++i )
      os << ( i ? "|" : "" ) << static_cast<int>( r.available[i] );
    os << ',' << static_cast<int>( r.selected ) << ',' << r.gain << '\n';
  }
  return os.str();
}

void write_decision_log( const decision_log& log, const std::filesystem::path& path )
{
  write_file_atomic( path, decision_log_csv( log ) );
}

} // namespace aigkit
