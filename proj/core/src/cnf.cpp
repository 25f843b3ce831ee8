#include <aigkit/cnf.hpp>

namespace aigkit
{

aig_cnf tseitin( const aig& g, std::span<const literal> roots )
{
  aig_cnf out;
  out.node_var.assign( g.size(), 0 );
  std::vector<node_id> stack;
  if ( roots.empty() )
  {
    for ( std::size_t i = 0; i < g.num_cos(); ++i )
      stack.push_back( g.co_at( i ).node() );
    for ( const auto pi : g.pis() )
      stack.push_back( pi );
  }
  else
  {
    for ( const auto r : roots )
      stack.push_back( r.node() );
  }
  stack.push_back( 0 );

  // collect the cone, then number nodes in increasing id order for stable output
  std::vector<char> in_cone( g.size(), 0 );
  while ( !stack.empty() )
  {
    const auto n = stack.back();
    stack.pop_back();
    if ( in_cone[n] )
      continue;
    in_cone[n] = 1;
    if ( g.is_and( n ) )
    {
      stack.push_back( g.fanin0( n ).node() );
      stack.push_back( g.fanin1( n ).node() );
    }
  }
  for ( node_id n = 0; n < g.size(); ++n )
  {
    if ( in_cone[n] )
      out.node_var[n] = static_cast<int>( out.formula.new_var() );
  }
  out.formula.add_clause( { -out.node_var[0] } );
  for ( node_id n = 0; n < g.size(); ++n )
  {
    if ( !in_cone[n] || !g.is_and( n ) )
      continue;
    const auto v = out.node_var[n];
    const auto a = out.lit( g.fanin0( n ) );
    const auto b = out.lit( g.fanin1( n ) );
    out.formula.add_clause( { -v, a } );
    out.formula.add_clause( { -v, b } );
    out.formula.add_clause( { v, -a, -b } );
  }
  return out;
}

} // namespace aigkit
