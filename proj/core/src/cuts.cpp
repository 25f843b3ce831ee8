#include <aigkit/cuts.hpp>
#include <aigkit/errors.hpp>

#include <algorithm>
#include <bit>
#include <unordered_map>

namespace aigkit
{

namespace
{

std::uint64_t swap_vars( std::uint64_t tt, std::uint32_t i, std::uint32_t j )
{
  if ( i == j )
    return tt;
  if ( i > j )
    std::swap( i, j );
  const std::uint32_t shift = ( 1u << j ) - ( 1u << i );
  const std::uint64_t mask = var_masks[i] & ~var_masks[j];
  const std::uint64_t t = ( ( tt >> shift ) ^ tt ) & mask;
  return tt ^ t ^ ( t << shift );
}

bool leaves_less( const fast_cut& a, const fast_cut& b )
{
  if ( a.size != b.size )
    return a.size < b.size;
  return std::lexicographical_compare( a.leaves.begin(), a.leaves.begin() + a.size, b.leaves.begin(),
                                       b.leaves.begin() + b.size );
}

} // namespace

std::uint64_t expand_truth( std::uint64_t truth, std::span<const node_id> from, std::span<const node_id> to )
{
  if ( from.size() == to.size() )
    return truth;
  std::array<std::uint32_t, fast_cut::max_leaves> pos{};
  std::size_t j = 0;
  for ( std::size_t i = 0; i < from.size(); ++i )
  {
    while ( to[j] != from[i] )
      ++j;
    pos[i] = static_cast<std::uint32_t>( j );
  }
  for ( std::size_t i = from.size(); i-- > 0; )
    truth = swap_vars( truth, static_cast<std::uint32_t>( i ), pos[i] );
  return truth;
}

bool fast_cut::dominates( const fast_cut& other ) const
{
  if ( size > other.size || ( signature & other.signature ) != signature )
    return false;
  return std::includes( other.leaves.begin(), other.leaves.begin() + other.size, leaves.begin(),
                        leaves.begin() + size );
}

cut fast_cut::to_cut( node_id root ) const
{
  return cut{ std::vector<node_id>( leaves.begin(), leaves.begin() + size ), root };
}

cut_enumerator::cut_enumerator( const aig& g, cut_params ps ) : g_( &g ), ps_( ps )
{
  if ( ps_.cut_size < 1 || ps_.cut_size > fast_cut::max_leaves )
    throw error( errc::invalid_argument, "cut size must be between 1 and 8" );
  if ( ps_.compute_truth && ps_.cut_size > 6 )
    throw error( errc::invalid_argument, "cut functions need cut size <= 6" );
  if ( ps_.max_cuts < 1 )
    ps_.max_cuts = 1;
}

void cut_enumerator::reset()
{
  cache_.clear();
  valid_.clear();
}

void cut_enumerator::invalidate_tfo( std::span<const node_id> seeds )
{
  std::vector<node_id> stack( seeds.begin(), seeds.end() );
  while ( !stack.empty() )
  {
    const auto n = stack.back();
    stack.pop_back();
    if ( n >= valid_.size() || !valid_[n] )
      continue;
    valid_[n] = 0;
    cache_[n].clear();
    for ( const auto fo : g_->fanouts( n ) )
      stack.push_back( fo );
  }
}

const std::vector<fast_cut>& cut_enumerator::cuts( node_id n )
{
  if ( cache_.size() < g_->size() )
  {
    cache_.resize( g_->size() );
    valid_.resize( g_->size(), 0 );
  }
  if ( valid_[n] )
    return cache_[n];

  // iterative post-order over the not-yet-computed transitive fanin
  std::vector<std::pair<node_id, bool>> stack{ { n, false } };
  while ( !stack.empty() )
  {
    auto [v, expanded] = stack.back();
    stack.pop_back();
    if ( valid_[v] )
      continue;
    if ( expanded || !g_->is_and( v ) )
    {
      compute( v );
      continue;
    }
    stack.emplace_back( v, true );
    for ( const auto f : { g_->fanin0( v ).node(), g_->fanin1( v ).node() } )
    {
      if ( !valid_[f] )
        stack.emplace_back( f, false );
    }
  }
  return cache_[n];
}

void cut_enumerator::compute( node_id n )
{
  auto& out = cache_[n];
  out.clear();
  valid_[n] = 1;
  if ( n == 0 || g_->is_dead( n ) )
    return;

  fast_cut trivial;
  trivial.leaves[0] = n;
  trivial.size = 1;
  trivial.signature = 1ull << ( n & 63 );
  trivial.truth = var_masks[0];

  if ( !g_->is_and( n ) )
  {
    out.push_back( trivial );
    return;
  }

  const auto f0 = g_->fanin0( n );
  const auto f1 = g_->fanin1( n );
  const auto& set0 = cache_[f0.node()];
  const auto& set1 = cache_[f1.node()];

  std::vector<fast_cut> found;
  for ( const auto& c0 : set0 )
  {
    for ( const auto& c1 : set1 )
    {
      const auto sig = c0.signature | c1.signature;
      if ( static_cast<std::uint32_t>( std::popcount( sig ) ) > ps_.cut_size )
        continue;
      fast_cut m;
      std::uint32_t i = 0, j = 0, k = 0;
      bool too_big = false;
      while ( i < c0.size || j < c1.size )
      {
        if ( k == ps_.cut_size )
        {
          too_big = true;
          break;
        }
        if ( j == c1.size || ( i < c0.size && c0.leaves[i] < c1.leaves[j] ) )
          m.leaves[k++] = c0.leaves[i++];
        else if ( i == c0.size || c1.leaves[j] < c0.leaves[i] )
          m.leaves[k++] = c1.leaves[j++];
        else
        {
          m.leaves[k++] = c0.leaves[i++];
          ++j;
        }
      }
      if ( too_big )
        continue;
      m.size = static_cast<std::uint8_t>( k );
      m.signature = sig;

      bool dominated = false;
      for ( const auto& e : found )
      {
        if ( e.dominates( m ) )
        {
          dominated = true;
          break;
        }
      }
      if ( dominated )
        continue;
      std::erase_if( found, [&]( const fast_cut& e ) { return m.dominates( e ); } );

      if ( ps_.compute_truth )
      {
        auto t0 = expand_truth( c0.truth, c0.leaf_span(), m.leaf_span() );
        auto t1 = expand_truth( c1.truth, c1.leaf_span(), m.leaf_span() );
        if ( f0.complemented() )
          t0 = ~t0;
        if ( f1.complemented() )
          t1 = ~t1;
        m.truth = t0 & t1;
      }
      found.push_back( m );
    }
  }
  std::sort( found.begin(), found.end(), leaves_less );
  if ( found.size() + 1 > ps_.max_cuts )
    found.resize( ps_.max_cuts - 1 );
  out.reserve( found.size() + 1 );
  out.push_back( trivial );
  out.insert( out.end(), found.begin(), found.end() );
}

std::vector<std::vector<cut>> enumerate_cuts( const aig& g, std::uint32_t k, std::uint32_t max_cuts_per_node )
{
  if ( k < 2 || k > 6 )
    throw error( errc::invalid_argument, "enumerate_cuts: k must be in 2..6" );
  cut_enumerator en( g, cut_params{ k, max_cuts_per_node, false } );
  std::vector<std::vector<cut>> result( g.size() );
  for ( node_id n = 1; n < g.size(); ++n )
  {
    if ( g.is_dead( n ) )
      continue;
    for ( const auto& c : en.cuts( n ) )
      result[n].push_back( c.to_cut( n ) );
  }
  return result;
}

truth_table cone_truth_table( const aig& g, node_id root, std::span<const node_id> leaves )
{
  const auto nv = static_cast<std::uint32_t>( leaves.size() );
  std::unordered_map<node_id, truth_table> value;
  for ( std::uint32_t i = 0; i < nv; ++i )
    value.emplace( leaves[i], truth_table::nth_var( nv, i ) );

  std::vector<std::pair<node_id, bool>> stack{ { root, false } };
  while ( !stack.empty() )
  {
    auto [v, expanded] = stack.back();
    stack.pop_back();
    if ( value.count( v ) )
      continue;
    if ( v == 0 )
    {
      value.emplace( 0, truth_table::constant( nv, false ) );
      continue;
    }
    if ( !g.is_and( v ) )
      throw error( errc::invalid_argument, "node " + std::to_string( root ) + " is not covered by the given leaves" );
    const auto f0 = g.fanin0( v );
    const auto f1 = g.fanin1( v );
    if ( expanded )
    {
      auto t0 = value.at( f0.node() );
      auto t1 = value.at( f1.node() );
      if ( f0.complemented() )
        t0 = ~t0;
      if ( f1.complemented() )
        t1 = ~t1;
      value.emplace( v, t0 & t1 );
      continue;
    }
    stack.emplace_back( v, true );
    stack.emplace_back( f0.node(), false );
    stack.emplace_back( f1.node(), false );
  }
  return value.at( root );
}

} // namespace aigkit
