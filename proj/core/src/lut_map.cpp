#include <aigkit/cuts.hpp>
#include <aigkit/errors.hpp>
#include <aigkit/lut_map.hpp>

#include <algorithm>

namespace aigkit
{

lut_mapping klut_map( const aig& g, std::uint32_t k )
{
  if ( k < 2 || k > 6 )
    throw error( errc::invalid_argument, "LUT size must be between 2 and 6, got " + std::to_string( k ) );
  const auto cuts = enumerate_cuts( g, k, 16 );
  std::vector<std::uint32_t> arrival( g.size(), 0 );
  std::vector<std::vector<node_id>> best( g.size() );
  for ( const auto n : topo_order( g ) )
  {
    if ( !g.is_and( n ) )
      continue;
    bool have = false;
    std::uint32_t best_arrival = 0;
    for ( const auto& c : cuts[n] )
    {
      if ( c.is_trivial() )
        continue;
      std::uint32_t a = 0;
      for ( const auto l : c.leaves )
        a = std::max( a, arrival[l] );
      ++a;
      const auto better = !have || a < best_arrival ||
                          ( a == best_arrival && ( c.leaves.size() < best[n].size() ||
                                                   ( c.leaves.size() == best[n].size() && c.leaves < best[n] ) ) );
      if ( better )
      {
        have = true;
        best_arrival = a;
        best[n] = c.leaves;
      }
    }
    if ( !have )
    {
      // always available: the node's own fanins
      best[n] = { g.fanin0( n ).node(), g.fanin1( n ).node() };
      std::sort( best[n].begin(), best[n].end() );
      best_arrival = 1 + std::max( arrival[best[n].front()], arrival[best[n].back()] );
    }
    arrival[n] = best_arrival;
  }

  lut_mapping m;
  std::vector<char> required( g.size(), 0 );
  std::vector<node_id> stack;
  for ( std::size_t i = 0; i < g.num_cos(); ++i )
  {
    const auto n = g.co_at( i ).node();
    m.lut_depth = std::max( m.lut_depth, arrival[n] );
    stack.push_back( n );
  }
  while ( !stack.empty() )
  {
    const auto n = stack.back();
    stack.pop_back();
    if ( !g.is_and( n ) || required[n] )
      continue;
    required[n] = 1;
    m.cover[n] = best[n];
    for ( const auto l : best[n] )
      stack.push_back( l );
  }
  m.lut_count = m.cover.size();
  return m;
}

} // namespace aigkit
