#include <aigkit/errors.hpp>
#include <aigkit/truth_table.hpp>
#include <aigkit/window.hpp>

#include <algorithm>
#include <limits>
#include <unordered_set>

namespace aigkit
{

std::vector<node_id> mffc( const aig& g, node_id root, std::span<const node_id> leaves )
{
  std::unordered_set<node_id> boundary( leaves.begin(), leaves.end() );
  std::unordered_map<node_id, std::uint32_t> refs;
  std::vector<node_id> result;
  std::vector<node_id> stack{ root };
  while ( !stack.empty() )
  {
    const auto n = stack.back();
    stack.pop_back();
    result.push_back( n );
    for ( const auto f : { g.fanin0( n ).node(), g.fanin1( n ).node() } )
    {
      if ( !g.is_and( f ) || boundary.count( f ) )
        continue;
      auto it = refs.try_emplace( f, g.refs( f ) ).first;
      if ( --it->second == 0 )
        stack.push_back( f );
    }
  }
  return result;
}

std::vector<node_id> reconvergence_cut( const aig& g, node_id root, std::uint32_t max_leaves )
{
  if ( !g.is_and( root ) )
    return { root };
  std::unordered_set<node_id> visited{ root };
  std::vector<node_id> leaves;
  for ( const auto f : { g.fanin0( root ).node(), g.fanin1( root ).node() } )
  {
    if ( visited.insert( f ).second )
      leaves.push_back( f );
  }
  while ( true )
  {
    // leaf whose expansion adds the fewest new leaves; ties go to the higher level, then smaller id
    int best_cost = std::numeric_limits<int>::max();
    std::size_t best = leaves.size();
    for ( std::size_t i = 0; i < leaves.size(); ++i )
    {
      const auto n = leaves[i];
      if ( !g.is_and( n ) )
        continue;
      int cost = -1;
      for ( const auto f : { g.fanin0( n ).node(), g.fanin1( n ).node() } )
        cost += visited.count( f ) ? 0 : 1;
      if ( cost < best_cost ||
           ( cost == best_cost && ( g.level( n ) > g.level( leaves[best] ) ||
                                    ( g.level( n ) == g.level( leaves[best] ) && n < leaves[best] ) ) ) )
      {
        best_cost = cost;
        best = i;
      }
    }
    if ( best == leaves.size() || leaves.size() + best_cost > max_leaves )
      break;
    const auto n = leaves[best];
    leaves.erase( leaves.begin() + static_cast<std::ptrdiff_t>( best ) );
    for ( const auto f : { g.fanin0( n ).node(), g.fanin1( n ).node() } )
    {
      if ( visited.insert( f ).second )
        leaves.push_back( f );
    }
  }
  std::sort( leaves.begin(), leaves.end() );
  return leaves;
}

std::vector<node_id> cone_nodes( const aig& g, node_id root, std::span<const node_id> leaves )
{
  std::unordered_set<node_id> seen( leaves.begin(), leaves.end() );
  std::vector<node_id> order;
  std::vector<std::pair<node_id, bool>> stack{ { root, false } };
  while ( !stack.empty() )
  {
    auto [n, expanded] = stack.back();
    stack.pop_back();
    if ( expanded )
    {
      order.push_back( n );
      continue;
    }
    if ( seen.count( n ) || !g.is_and( n ) )
      continue;
    seen.insert( n );
    stack.emplace_back( n, true );
    stack.emplace_back( g.fanin1( n ).node(), false );
    stack.emplace_back( g.fanin0( n ).node(), false );
  }
  return order;
}

window_simulator::window_simulator( const aig& g, std::span<const node_id> leaves )
    : g_( &g ), num_leaves_( static_cast<std::uint32_t>( leaves.size() ) )
{
  if ( leaves.size() > 8 )
    throw error( errc::invalid_argument, "window simulation supports at most 8 leaves" );
  const std::uint32_t bits = 1u << num_leaves_;
  for ( std::uint32_t w = 0; w < 4; ++w )
  {
    if ( bits >= 64 * ( w + 1 ) )
      care_[w] = ~0ull;
    else if ( bits > 64 * w )
      care_[w] = length_mask( num_leaves_ );
  }
  for ( std::uint32_t i = 0; i < num_leaves_; ++i )
  {
    table t{};
    for ( std::uint32_t w = 0; w < 4; ++w )
    {
      if ( i < 6 )
        t[w] = var_masks[i];
      else
        t[w] = ( ( w >> ( i - 6 ) ) & 1u ) ? ~0ull : 0ull;
      t[w] &= care_[w];
    }
    values_[leaves[i]] = t;
  }
  values_.try_emplace( 0, table{} );
}

const window_simulator::table& window_simulator::value( node_id n )
{
  if ( auto it = values_.find( n ); it != values_.end() )
    return it->second;
  std::vector<std::pair<node_id, bool>> stack{ { n, false } };
  while ( !stack.empty() )
  {
    auto [v, expanded] = stack.back();
    stack.pop_back();
    if ( values_.count( v ) )
      continue;
    if ( !g_->is_and( v ) )
      throw error( errc::invalid_argument, "node outside of the simulated window" );
    const auto f0 = g_->fanin0( v ), f1 = g_->fanin1( v );
    if ( !expanded )
    {
      stack.emplace_back( v, true );
      stack.emplace_back( f0.node(), false );
      stack.emplace_back( f1.node(), false );
      continue;
    }
    const auto& a = values_.at( f0.node() );
    const auto& b = values_.at( f1.node() );
    table t{};
    for ( std::uint32_t w = 0; w < 4; ++w )
    {
      const auto x = f0.complemented() ? ~a[w] : a[w];
      const auto y = f1.complemented() ? ~b[w] : b[w];
      t[w] = x & y & care_[w];
    }
    values_.emplace( v, t );
  }
  return values_.at( n );
}

} // namespace aigkit
