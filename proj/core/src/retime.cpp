#include <aigkit/errors.hpp>
#include <aigkit/retime.hpp>
#include <aigkit/splitmix64.hpp>

#include <algorithm>

namespace aigkit
{

namespace
{

bool forward_feasible( const aig& g, node_id v )
{
  const auto f0 = g.fanin0( v ), f1 = g.fanin1( v );
  if ( f0.node() == f1.node() )
    return false;
  const auto i0 = g.latch_index_of( f0.node() );
  const auto i1 = g.latch_index_of( f1.node() );
  if ( !i0 || !i1 )
    return false;
  const auto init0 = g.latches()[*i0].init, init1 = g.latches()[*i1].init;
  return init0 <= 1 && init0 == init1;
}

/* latch indices driven by v, or empty when v has any other fanout */
std::vector<std::size_t> latches_fed_only_by( const aig& g, node_id v )
{
  std::vector<std::size_t> fed;
  if ( !g.fanouts( v ).empty() )
    return {};
  for ( const auto& po : g.pos() )
  {
    if ( po.driver.node() == v )
      return {};
  }
  for ( std::size_t i = 0; i < g.num_latches(); ++i )
  {
    if ( g.latches()[i].next.node() == v )
      fed.push_back( i );
  }
  return fed;
}

bool backward_feasible( const aig& g, node_id v )
{
  const auto fed = latches_fed_only_by( g, v );
  if ( fed.empty() )
    return false;
  return std::all_of( fed.begin(), fed.end(), [&]( std::size_t i ) {
    const auto& l = g.latches()[i];
    return l.init <= 1 && ( l.init ^ ( l.next.complemented() ? 1u : 0u ) ) == 0;
  } );
}

} // namespace

std::vector<retime_move> feasible_moves( const aig& g )
{
  std::vector<retime_move> moves;
  g.foreach_and( [&]( node_id v ) {
    if ( forward_feasible( g, v ) )
      moves.push_back( { retime_direction::forward, v } );
    if ( backward_feasible( g, v ) )
      moves.push_back( { retime_direction::backward, v } );
  } );
  return moves;
}

void apply_move( aig& g, const retime_move& move )
{
  const auto v = move.node;
  if ( !g.is_and( v ) || g.is_dead( v ) )
    throw error( errc::invalid_argument, "retiming move on a node that is not a live And" );
  const auto f0 = g.fanin0( v ), f1 = g.fanin1( v );
  if ( move.direction == retime_direction::forward )
  {
    if ( !forward_feasible( g, v ) )
      throw error( errc::invalid_argument, "forward retiming move is not feasible at node " + std::to_string( v ) );
    const auto& l0 = g.latches()[*g.latch_index_of( f0.node() )];
    const auto& l1 = g.latches()[*g.latch_index_of( f1.node() )];
    const auto init = static_cast<std::uint8_t>( ( l0.init ^ f0.complemented() ) & ( l1.init ^ f1.complemented() ) );
    const auto n0 = l0.next ^ f0.complemented();
    const auto n1 = l1.next ^ f1.complemented();
    const auto merged = g.create_latch( init );
    const auto index = g.num_latches() - 1;
    g.set_latch_next( index, g.create_and( n0, n1 ) );
    g.replace( v, merged );
    g.remove_unused_latches();
    g.cleanup();
    return;
  }
  if ( !backward_feasible( g, v ) )
    throw error( errc::invalid_argument, "backward retiming move is not feasible at node " + std::to_string( v ) );
  const auto fed = latches_fed_only_by( g, v );
  const auto a = g.create_latch( 0 );
  g.set_latch_next( g.num_latches() - 1, f0 );
  const auto b = g.create_latch( 0 );
  g.set_latch_next( g.num_latches() - 1, f1 );
  const auto gate = g.create_and( a, b );
  for ( auto it = fed.rbegin(); it != fed.rend(); ++it )
  {
    const auto complemented = g.latches()[*it].next.complemented();
    g.remove_latch( *it, gate ^ complemented );
  }
  g.remove_unused_latches();
  g.cleanup();
}

aig retime_augment( const aig& input, const retime_config& cfg )
{
  if ( input.num_latches() == 0 )
    throw error( errc::no_latches, "retiming needs a sequential network, but '" + input.name() + "' has no latches" );
  aig g = input;
  splitmix64 rng( cfg.seed );
  for ( std::uint32_t i = 0; i < cfg.max_moves; ++i )
  {
    const auto moves = feasible_moves( g );
    if ( moves.empty() )
      break;
    apply_move( g, moves[rng.next() % moves.size()] );
  }
  return g;
}

} // namespace aigkit
