#include <aigkit/errors.hpp>
#include <aigkit/isop.hpp>
#include <aigkit/npn.hpp>
#include <aigkit/opt_passes.hpp>
#include <aigkit/rewrite_library.hpp>
#include <aigkit/window.hpp>

#include <algorithm>
#include <unordered_set>

namespace aigkit
{

namespace
{

bool better_candidate( const replacement_candidate& a, const replacement_candidate& b )
{
  if ( a.gain != b.gain )
    return a.gain > b.gain;
  if ( a.level != b.level )
    return a.level < b.level;
  return a.leaves < b.leaves;
}

bool acceptable( std::int64_t gain, bool zero_cost )
{
  return gain > 0 || ( zero_cost && gain == 0 );
}

/* evaluates one structure over leaf literals; fills a candidate when it is admissible */
std::optional<replacement_candidate> evaluate( const aig& g, node_id v, const subgraph& s,
                                               std::vector<literal> leaves, const std::unordered_set<node_id>& freed,
                                               bool level_guard )
{
  const auto budget = static_cast<std::uint32_t>( freed.size() );
  const auto est = estimate_placement( g, s, leaves, freed, v, budget );
  if ( !est.valid )
    return std::nullopt;
  if ( est.existing_root && est.existing_root->node() == v )
    return std::nullopt;
  if ( level_guard && est.root_level > g.level( v ) )
    return std::nullopt;
  replacement_candidate c;
  c.root = v;
  c.leaves = std::move( leaves );
  c.structure = s;
  c.gain = static_cast<std::int64_t>( freed.size() ) - static_cast<std::int64_t>( est.added );
  c.level = est.root_level;
  c.version = g.version();
  return c;
}

} // namespace

std::optional<replacement_candidate> rewrite_check( const aig& g, node_id v, bool zero_cost, cut_enumerator* cuts )
{
  if ( !g.is_and( v ) || g.is_dead( v ) )
    return std::nullopt;
  std::optional<cut_enumerator> local;
  if ( !cuts )
  {
    local.emplace( g, cut_params{ 4, 8, true } );
    cuts = &*local;
  }
  const auto& lib = rewrite_library::instance();
  const auto& npn = npn4_table::instance();

  std::optional<replacement_candidate> best;
  std::vector<literal> best_cut;
  for ( const auto& c : cuts->cuts( v ) )
  {
    if ( c.size < 2 )
      continue;
    const auto freed_nodes = mffc( g, v, c.leaf_span() );
    const std::unordered_set<node_id> freed( freed_nodes.begin(), freed_nodes.end() );
    std::vector<literal> cut_leaves;
    for ( std::uint32_t i = 0; i < c.size; ++i )
      cut_leaves.emplace_back( c.leaves[i], false );

    const auto function = static_cast<std::uint16_t>( c.truth & 0xFFFF );
    const auto& entry = npn[function];
    const auto& t = entry.transform;
    std::vector<literal> leaves( 4, const_false );
    for ( std::uint32_t i = 0; i < 4; ++i )
    {
      const auto src = t.perm[i];
      const auto base = src < c.size ? cut_leaves[src] : const_false;
      leaves[i] = base ^ ( ( ( t.input_neg >> i ) & 1u ) != 0 );
    }
    for ( const auto& s : lib.structures( entry.canonical ) )
    {
      auto placed = s;
      placed.root ^= t.output_neg ? 1u : 0u;
      auto cand = evaluate( g, v, placed, leaves, freed, true );
      if ( !cand || !acceptable( cand->gain, zero_cost ) )
        continue;
      if ( best )
      {
        // order by gain, then level, then the cut's leaf set
        replacement_candidate a = *cand, b = *best;
        a.leaves = cut_leaves;
        b.leaves = best_cut;
        if ( !better_candidate( a, b ) )
          continue;
      }
      best = std::move( cand );
      best_cut = cut_leaves;
    }
  }
  return best;
}

std::optional<replacement_candidate> refactor_check( const aig& g, node_id v, bool zero_cost )
{
  if ( !g.is_and( v ) || g.is_dead( v ) )
    return std::nullopt;
  const auto leaves = reconvergence_cut( g, v, refactor_cut_size );
  if ( leaves.size() < 2 )
    return std::nullopt;
  const auto freed_nodes = mffc( g, v, leaves );
  if ( freed_nodes.size() < 2 && !zero_cost )
    return std::nullopt;
  const std::unordered_set<node_id> freed( freed_nodes.begin(), freed_nodes.end() );

  const auto function = cone_truth_table( g, v, leaves );
  const auto s = factor_function( function );
  std::vector<literal> leaf_lits;
  for ( const auto l : leaves )
    leaf_lits.emplace_back( l, false );
  auto cand = evaluate( g, v, s, std::move( leaf_lits ), freed, false );
  if ( !cand || !acceptable( cand->gain, zero_cost ) )
    return std::nullopt;
  return cand;
}

std::optional<replacement_candidate> resub_check( const aig& g, node_id v )
{
  if ( !g.is_and( v ) || g.is_dead( v ) )
    return std::nullopt;
  const auto leaves = reconvergence_cut( g, v, resub_cut_size );
  const auto freed_nodes = mffc( g, v, leaves );
  const std::unordered_set<node_id> freed( freed_nodes.begin(), freed_nodes.end() );

  // divisors: leaves, cone nodes that survive the substitution, then nearby nodes over them
  std::vector<node_id> divisors( leaves.begin(), leaves.end() );
  std::unordered_set<node_id> in_divisors( leaves.begin(), leaves.end() );
  for ( const auto n : cone_nodes( g, v, leaves ) )
  {
    if ( !freed.count( n ) && divisors.size() < resub_max_divisors )
    {
      divisors.push_back( n );
      in_divisors.insert( n );
    }
  }
  for ( std::size_t i = 0; i < divisors.size() && divisors.size() < resub_max_divisors; ++i )
  {
    for ( const auto fo : g.fanouts( divisors[i] ) )
    {
      if ( divisors.size() >= resub_max_divisors )
        break;
      if ( g.is_dead( fo ) || in_divisors.count( fo ) || freed.count( fo ) )
        continue;
      if ( in_divisors.count( g.fanin0( fo ).node() ) && in_divisors.count( g.fanin1( fo ).node() ) )
      {
        divisors.push_back( fo );
        in_divisors.insert( fo );
      }
    }
  }
  divisors.erase( std::remove( divisors.begin(), divisors.end(), node_id{ 0 } ), divisors.end() );
  if ( divisors.empty() )
    return std::nullopt;

  window_simulator sim( g, leaves );
  const auto target = sim.value( v );
  const auto& care = sim.care();
  std::vector<window_simulator::table> values;
  values.reserve( divisors.size() );
  for ( const auto d : divisors )
    values.push_back( sim.value( d ) );

  auto equal = [&]( const window_simulator::table& a, bool ca, const window_simulator::table& t ) {
    for ( std::uint32_t w = 0; w < 4; ++w )
    {
      if ( ( ( ca ? ~a[w] : a[w] ) & care[w] ) != t[w] )
        return false;
    }
    return true;
  };
  auto make = [&]( subgraph s, std::vector<literal> lits ) {
    replacement_candidate c;
    c.root = v;
    c.leaves = std::move( lits );
    c.structure = std::move( s );
    c.version = g.version();
    return c;
  };

  // 0-resub: v == d or v == !d
  for ( std::size_t i = 0; i < divisors.size(); ++i )
  {
    for ( const bool c : { false, true } )
    {
      if ( !equal( values[i], c, target ) )
        continue;
      subgraph s;
      s.num_leaves = 1;
      s.root = subgraph::make_lit( 1, c );
      auto cand = make( std::move( s ), { literal( divisors[i], false ) } );
      cand.gain = static_cast<std::int64_t>( freed.size() );
      cand.level = g.level( divisors[i] );
      return cand;
    }
  }
  if ( freed.size() < 2 )
    return std::nullopt;

  // 1-resub: v == (+-d1 & +-d2), or its complement (an OR of divisors)
  window_simulator::table target_neg{};
  for ( std::uint32_t w = 0; w < 4; ++w )
    target_neg[w] = ~target[w] & care[w];
  for ( std::size_t i = 0; i < divisors.size(); ++i )
  {
    for ( std::size_t j = i + 1; j < divisors.size(); ++j )
    {
      for ( std::uint32_t pol = 0; pol < 4; ++pol )
      {
        const bool ci = pol & 1u, cj = pol & 2u;
        window_simulator::table conj{};
        for ( std::uint32_t w = 0; w < 4; ++w )
          conj[w] = ( ci ? ~values[i][w] : values[i][w] ) & ( cj ? ~values[j][w] : values[j][w] ) & care[w];
        for ( const bool out : { false, true } )
        {
          if ( conj != ( out ? target_neg : target ) )
            continue;
          subgraph s;
          s.num_leaves = 2;
          s.ands.push_back( { subgraph::make_lit( 1, ci ), subgraph::make_lit( 2, cj ) } );
          s.root = subgraph::make_lit( 3, out );
          std::vector<literal> lits{ literal( divisors[i], false ), literal( divisors[j], false ) };
          const auto est = estimate_placement( g, s, lits, freed, v, 1 );
          if ( !est.valid || ( est.existing_root && est.existing_root->node() == v ) )
            continue;
          const auto gain = static_cast<std::int64_t>( freed.size() ) - est.added;
          if ( gain <= 0 )
            continue;
          auto cand = make( std::move( s ), std::move( lits ) );
          cand.gain = gain;
          cand.level = est.root_level;
          return cand;
        }
      }
    }
  }
  return std::nullopt;
}

transform_outcome apply_candidate( aig& g, const replacement_candidate& c )
{
  if ( c.version != g.version() )
    throw error( errc::stale_candidate, "candidate for node " + std::to_string( c.root ) +
                                            " was computed on an older version of the network" );
  const auto before = g.num_live_ands();
  const auto root = instantiate( g, c.structure, c.leaves );
  transform_outcome out;
  if ( root.node() == c.root )
    return out;
  g.replace( c.root, root );
  out.applied = true;
  out.structural_change = true;
  out.gain = static_cast<std::int64_t>( before ) - static_cast<std::int64_t>( g.num_live_ands() );
  return out;
}

transform_outcome rewrite_node( aig& g, node_id v, bool zero_cost )
{
  if ( auto c = rewrite_check( g, v, zero_cost ) )
    return apply_candidate( g, *c );
  return {};
}

transform_outcome refactor_node( aig& g, node_id v, bool zero_cost )
{
  if ( auto c = refactor_check( g, v, zero_cost ) )
    return apply_candidate( g, *c );
  return {};
}

transform_outcome resub_node( aig& g, node_id v )
{
  if ( auto c = resub_check( g, v ) )
    return apply_candidate( g, *c );
  return {};
}

namespace
{

template<class Fn>
pass_stats run_pass( aig& g, Fn&& fn )
{
  pass_stats st;
  g.cleanup();
  for ( const auto v : topo_order( g ) )
  {
    if ( !g.is_and( v ) || g.is_dead( v ) )
      continue;
    const auto out = fn( v );
    if ( out.applied )
    {
      ++st.applied;
      st.gain += out.gain;
    }
  }
  g.cleanup();
  return st;
}

} // namespace

pass_stats rewrite_pass( aig& g, bool zero_cost )
{
  cut_enumerator cuts( g, cut_params{ 4, 8, true } );
  return run_pass( g, [&]( node_id v ) {
    transform_outcome out;
    if ( auto c = rewrite_check( g, v, zero_cost, &cuts ) )
    {
      out = apply_candidate( g, *c );
      cuts.invalidate_tfo( g.last_touched() );
    }
    return out;
  } );
}

pass_stats refactor_pass( aig& g, bool zero_cost )
{
  return run_pass( g, [&]( node_id v ) { return refactor_node( g, v, zero_cost ); } );
}

pass_stats resub_pass( aig& g )
{
  return run_pass( g, [&]( node_id v ) { return resub_node( g, v ); } );
}

} // namespace aigkit
