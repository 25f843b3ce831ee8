#include <aigkit/aig.hpp>
#include <aigkit/errors.hpp>

#include <algorithm>
#include <cassert>
#include <queue>

namespace aigkit
{

aig::aig( std::string name ) : name_( std::move( name ) )
{
  nodes_.emplace_back();  // constant false
  fanouts_.emplace_back();
  co_refs_.push_back( 0 );
}

node_id aig::add_node( node_kind kind )
{
  const auto id = static_cast<node_id>( nodes_.size() );
  aig_node n;
  n.kind = kind;
  nodes_.push_back( n );
  fanouts_.emplace_back();
  co_refs_.push_back( 0 );
  ++version_;
  return id;
}

literal aig::create_pi( std::string name )
{
  const auto id = add_node( node_kind::primary_input );
  pis_.push_back( id );
  pi_names_.push_back( std::move( name ) );
  return literal( id, false );
}

literal aig::create_latch( std::uint8_t init, std::string name )
{
  const auto id = add_node( node_kind::latch );
  latch_info info;
  info.output = id;
  info.next = const_false;
  info.init = init;
  info.name = std::move( name );
  latches_.push_back( std::move( info ) );
  add_co_ref( 0 );
  return literal( id, false );
}

void aig::set_latch_next( std::size_t latch_index, literal next )
{
  auto& l = latches_.at( latch_index );
  remove_co_ref( l.next.node() );
  l.next = next;
  add_co_ref( next.node() );
  ++version_;
}

std::size_t aig::create_po( literal driver, std::string name )
{
  pos_.push_back( output_port{ driver, std::move( name ) } );
  add_co_ref( driver.node() );
  ++version_;
  return pos_.size() - 1;
}

void aig::set_po_driver( std::size_t po_index, literal driver )
{
  auto& po = pos_.at( po_index );
  remove_co_ref( po.driver.node() );
  po.driver = driver;
  add_co_ref( driver.node() );
  ++version_;
}

std::optional<literal> aig::trivial_and( literal a, literal b )
{
  if ( a.node() == 0 )
    return a.complemented() ? b : const_false;
  if ( b.node() == 0 )
    return b.complemented() ? a : const_false;
  if ( a == b )
    return a;
  if ( a == !b )
    return const_false;
  return std::nullopt;
}

std::optional<literal> aig::find_and( literal a, literal b ) const
{
  if ( auto t = trivial_and( a, b ) )
    return t;
  if ( b < a )
    std::swap( a, b );
  if ( auto it = strash_.find( key_of( a, b ) ); it != strash_.end() )
    return literal( it->second, false );
  return std::nullopt;
}

literal aig::create_and( literal a, literal b )
{
  if ( auto t = trivial_and( a, b ) )
    return *t;
  if ( b < a )
    std::swap( a, b );
  if ( auto it = strash_.find( key_of( a, b ) ); it != strash_.end() )
    return literal( it->second, false );

  const auto id = add_node( node_kind::and_gate );
  auto& n = nodes_[id];
  n.fanin0 = a;
  n.fanin1 = b;
  n.level = 1 + std::max( nodes_[a.node()].level, nodes_[b.node()].level );
  add_ref( a.node(), id );
  add_ref( b.node(), id );
  strash_.emplace( key_of( a, b ), id );
  ++live_ands_;
  return literal( id, false );
}

literal aig::create_xor( literal a, literal b )
{
  const auto t0 = create_and( a, !b );
  const auto t1 = create_and( !a, b );
  return create_or( t0, t1 );
}

literal aig::create_mux( literal sel, literal then_lit, literal else_lit )
{
  return create_or( create_and( sel, then_lit ), create_and( !sel, else_lit ) );
}

void aig::add_ref( node_id n, node_id fanout )
{
  ++nodes_[n].refs;
  fanouts_[n].push_back( fanout );
}

void aig::remove_ref( node_id n, node_id fanout )
{
  assert( nodes_[n].refs > 0 );
  --nodes_[n].refs;
  auto& fo = fanouts_[n];
  if ( auto it = std::find( fo.begin(), fo.end(), fanout ); it != fo.end() )
    fo.erase( it );
}

void aig::add_co_ref( node_id n )
{
  ++nodes_[n].refs;
  ++co_refs_[n];
}

void aig::remove_co_ref( node_id n )
{
  assert( nodes_[n].refs > 0 && co_refs_[n] > 0 );
  --nodes_[n].refs;
  --co_refs_[n];
}

void aig::hash_erase( node_id n )
{
  const auto& nd = nodes_[n];
  if ( nd.kind != node_kind::and_gate )
    return;
  if ( auto it = strash_.find( key_of( nd.fanin0, nd.fanin1 ) ); it != strash_.end() && it->second == n )
    strash_.erase( it );
}

void aig::hash_insert( node_id n )
{
  auto& nd = nodes_[n];
  if ( nd.fanin1 < nd.fanin0 )
    std::swap( nd.fanin0, nd.fanin1 );
  strash_[key_of( nd.fanin0, nd.fanin1 )] = n;
}

void aig::kill( node_id root )
{
  std::vector<node_id> stack{ root };
  while ( !stack.empty() )
  {
    const auto n = stack.back();
    stack.pop_back();
    auto& nd = nodes_[n];
    if ( nd.dead || nd.kind != node_kind::and_gate || nd.refs != 0 )
      continue;
    hash_erase( n );
    nd.dead = true;
    --live_ands_;
    for ( const auto f : { nd.fanin0.node(), nd.fanin1.node() } )
    {
      remove_ref( f, n );
      if ( nodes_[f].refs == 0 && nodes_[f].kind == node_kind::and_gate )
        stack.push_back( f );
    }
  }
}

std::size_t aig::delete_if_dangling( node_id n )
{
  if ( nodes_[n].dead || nodes_[n].kind != node_kind::and_gate || nodes_[n].refs != 0 )
    return 0;
  const auto before = live_ands_;
  kill( n );
  ++version_;
  return before - live_ands_;
}

std::uint32_t aig::computed_level( node_id n ) const
{
  const auto& nd = nodes_[n];
  if ( nd.kind != node_kind::and_gate )
    return 0;
  return 1 + std::max( nodes_[nd.fanin0.node()].level, nodes_[nd.fanin1.node()].level );
}

void aig::update_levels( std::vector<node_id> seeds )
{
  while ( !seeds.empty() )
  {
    const auto n = seeds.back();
    seeds.pop_back();
    if ( nodes_[n].dead )
      continue;
    const auto lvl = computed_level( n );
    if ( lvl == nodes_[n].level )
      continue;
    nodes_[n].level = lvl;
    for ( const auto fo : fanouts_[n] )
      seeds.push_back( fo );
  }
}

void aig::replace( node_id old_node, literal with )
{
  assert( with.node() != old_node );
  std::unordered_map<node_id, literal> pending;
  std::vector<std::pair<node_id, literal>> queue;
  std::vector<node_id> level_seeds;
  touched_.clear();

  auto resolve = [&]( literal l ) {
    for ( auto it = pending.find( l.node() ); it != pending.end(); it = pending.find( l.node() ) )
      l = it->second ^ l.complemented();
    return l;
  };
  auto push = [&]( node_id o, literal n ) {
    n = resolve( n );
    hash_erase( o );
    pending.emplace( o, n );
    queue.emplace_back( o, n );
  };

  push( old_node, with );
  for ( std::size_t qi = 0; qi < queue.size(); ++qi )
  {
    const auto o = queue[qi].first;
    const auto n = resolve( queue[qi].second );

    if ( co_refs_[o] > 0 )
    {
      for ( std::size_t i = 0; i < pos_.size(); ++i )
      {
        if ( pos_[i].driver.node() == o )
          set_po_driver( i, n ^ pos_[i].driver.complemented() );
      }
      for ( std::size_t i = 0; i < latches_.size(); ++i )
      {
        if ( latches_[i].next.node() == o )
          set_latch_next( i, n ^ latches_[i].next.complemented() );
      }
    }

    const auto fanouts = fanouts_[o];
    for ( const auto f : fanouts )
    {
      if ( pending.count( f ) || nodes_[f].dead )
        continue;
      hash_erase( f );
      auto& nd = nodes_[f];
      if ( nd.fanin0.node() == o )
      {
        remove_ref( o, f );
        nd.fanin0 = n ^ nd.fanin0.complemented();
        add_ref( n.node(), f );
      }
      if ( nd.fanin1.node() == o )
      {
        remove_ref( o, f );
        nd.fanin1 = n ^ nd.fanin1.complemented();
        add_ref( n.node(), f );
      }
      if ( auto t = find_and( nd.fanin0, nd.fanin1 ) )
      {
        push( f, *t );
      }
      else
      {
        hash_insert( f );
        level_seeds.push_back( f );
      }
    }
  }

  for ( const auto& [o, n] : queue )
  {
    if ( nodes_[o].kind == node_kind::and_gate )
      kill( o );
  }
  touched_ = level_seeds;
  update_levels( std::move( level_seeds ) );
  ++version_;
}

std::size_t aig::cleanup()
{
  std::vector<char> mark( nodes_.size(), 0 );
  std::vector<node_id> stack;
  for ( std::size_t i = 0; i < num_cos(); ++i )
    stack.push_back( co_at( i ).node() );
  while ( !stack.empty() )
  {
    const auto n = stack.back();
    stack.pop_back();
    if ( mark[n] )
      continue;
    mark[n] = 1;
    if ( nodes_[n].kind == node_kind::and_gate )
    {
      stack.push_back( nodes_[n].fanin0.node() );
      stack.push_back( nodes_[n].fanin1.node() );
    }
  }
  std::vector<node_id> removed;
  for ( node_id n = 0; n < nodes_.size(); ++n )
  {
    auto& nd = nodes_[n];
    if ( nd.kind != node_kind::and_gate || nd.dead || mark[n] )
      continue;
    hash_erase( n );
    nd.dead = true;
    --live_ands_;
    removed.push_back( n );
  }
  if ( removed.empty() )
    return 0;
  // references between two removed nodes are dropped wholesale
  for ( const auto n : removed )
  {
    const auto& nd = nodes_[n];
    for ( const auto f : { nd.fanin0.node(), nd.fanin1.node() } )
    {
      if ( mark[f] )
        remove_ref( f, n );
    }
  }
  for ( const auto n : removed )
  {
    nodes_[n].refs = 0;
    fanouts_[n].clear();
  }
  ++version_;
  return removed.size();
}

std::optional<std::size_t> aig::latch_index_of( node_id n ) const
{
  for ( std::size_t i = 0; i < latches_.size(); ++i )
  {
    if ( latches_[i].output == n )
      return i;
  }
  return std::nullopt;
}

void aig::remove_latch( std::size_t index, literal substitute )
{
  const auto out = latches_.at( index ).output;
  if ( nodes_[out].refs > 0 )
    replace( out, substitute );
  const auto next = latches_[index].next;
  remove_co_ref( next.node() );
  latches_.erase( latches_.begin() + static_cast<std::ptrdiff_t>( index ) );
  nodes_[out].dead = true;
  delete_if_dangling( next.node() );
  ++version_;
}

std::size_t aig::remove_unused_latches()
{
  std::size_t removed = 0;
  for ( std::size_t i = latches_.size(); i-- > 0; )
  {
    if ( nodes_[latches_[i].output].refs == 0 )
    {
      remove_latch( i, const_false );
      ++removed;
    }
  }
  return removed;
}

std::vector<node_id> topo_order( const aig& g )
{
  std::vector<node_id> order;
  order.reserve( g.size() );
  order.push_back( 0 );
  for ( std::size_t i = 0; i < g.num_cis(); ++i )
    order.push_back( g.ci_at( i ) );

  std::vector<std::uint32_t> pending( g.size(), 0 );
  std::priority_queue<node_id, std::vector<node_id>, std::greater<>> ready;
  std::size_t num_ands = 0;
  g.foreach_and( [&]( node_id n ) {
    ++num_ands;
    std::uint32_t count = 0;
    if ( g.is_and( g.fanin0( n ).node() ) )
      ++count;
    if ( g.is_and( g.fanin1( n ).node() ) )
      ++count;
    pending[n] = count;
    if ( count == 0 )
      ready.push( n );
  } );

  std::size_t emitted = 0;
  while ( !ready.empty() )
  {
    const auto n = ready.top();
    ready.pop();
    order.push_back( n );
    ++emitted;
    for ( const auto fo : g.fanouts( n ) )
    {
      if ( g.is_dead( fo ) )
        continue;
      if ( --pending[fo] == 0 )
        ready.push( fo );
    }
  }
  if ( emitted != num_ands )
    throw error( errc::cycle_detected, "combinational loop detected in network '" + g.name() + "'" );
  return order;
}

std::vector<std::uint32_t> compute_levels( const aig& g )
{
  std::vector<std::uint32_t> levels( g.size(), 0 );
  for ( const auto n : topo_order( g ) )
  {
    if ( g.is_and( n ) )
      levels[n] = 1 + std::max( levels[g.fanin0( n ).node()], levels[g.fanin1( n ).node()] );
  }
  return levels;
}

namespace
{

std::vector<char> reachable_from_cos( const aig& g )
{
  std::vector<char> mark( g.size(), 0 );
  std::vector<node_id> stack;
  for ( std::size_t i = 0; i < g.num_cos(); ++i )
    stack.push_back( g.co_at( i ).node() );
  while ( !stack.empty() )
  {
    const auto n = stack.back();
    stack.pop_back();
    if ( mark[n] )
      continue;
    mark[n] = 1;
    if ( g.is_and( n ) )
    {
      stack.push_back( g.fanin0( n ).node() );
      stack.push_back( g.fanin1( n ).node() );
    }
  }
  return mark;
}

} // namespace

std::size_t and_count( const aig& g )
{
  const auto mark = reachable_from_cos( g );
  std::size_t count = 0;
  g.foreach_and( [&]( node_id n ) { count += mark[n] ? 1 : 0; } );
  return count;
}

network_stats stats( const aig& g )
{
  network_stats s;
  s.pi_count = g.num_pis();
  s.po_count = g.num_pos();
  s.latch_count = g.num_latches();
  s.and_count = and_count( g );
  const auto levels = compute_levels( g );
  for ( std::size_t i = 0; i < g.num_cos(); ++i )
    s.level = std::max( s.level, levels[g.co_at( i ).node()] );
  return s;
}

std::vector<std::uint64_t> simulate_nodes( const aig& g, std::span<const std::uint64_t> ci_patterns,
                                           std::size_t num_words )
{
  if ( ci_patterns.size() != g.num_cis() * num_words )
    throw error( errc::invalid_argument, "simulate: expected " + std::to_string( g.num_cis() * num_words ) +
                                             " pattern words, got " + std::to_string( ci_patterns.size() ) );
  std::vector<std::uint64_t> values( g.size() * num_words, 0 );
  for ( std::size_t i = 0; i < g.num_cis(); ++i )
  {
    const auto n = g.ci_at( i );
    std::copy_n( ci_patterns.begin() + static_cast<std::ptrdiff_t>( i * num_words ), num_words,
                 values.begin() + static_cast<std::ptrdiff_t>( n * num_words ) );
  }
  for ( const auto n : topo_order( g ) )
  {
    if ( !g.is_and( n ) )
      continue;
    const auto f0 = g.fanin0( n );
    const auto f1 = g.fanin1( n );
    const std::uint64_t m0 = f0.complemented() ? ~0ull : 0ull;
    const std::uint64_t m1 = f1.complemented() ? ~0ull : 0ull;
    const auto* a = &values[f0.node() * num_words];
    const auto* b = &values[f1.node() * num_words];
    auto* out = &values[n * num_words];
    for ( std::size_t w = 0; w < num_words; ++w )
      out[w] = ( a[w] ^ m0 ) & ( b[w] ^ m1 );
  }
  return values;
}

std::vector<std::uint64_t> simulate_words( const aig& g, std::span<const std::uint64_t> ci_patterns,
                                           std::size_t num_words )
{
  const auto values = simulate_nodes( g, ci_patterns, num_words );
  std::vector<std::uint64_t> out;
  out.reserve( g.num_cos() * num_words );
  for ( std::size_t i = 0; i < g.num_cos(); ++i )
  {
    const auto l = g.co_at( i );
    const std::uint64_t m = l.complemented() ? ~0ull : 0ull;
    for ( std::size_t w = 0; w < num_words; ++w )
      out.push_back( values[l.node() * num_words + w] ^ m );
  }
  return out;
}

std::vector<std::uint64_t> simulate( const aig& g, std::span<const std::uint64_t> ci_patterns )
{
  return simulate_words( g, ci_patterns, 1 );
}

aig rebuild( const aig& g )
{
  aig out( g.name() );
  std::vector<literal> map( g.size(), const_false );
  for ( std::size_t i = 0; i < g.num_pis(); ++i )
    map[g.pis()[i]] = out.create_pi( g.pi_name( i ) );
  for ( const auto& l : g.latches() )
    map[l.output] = out.create_latch( l.init, l.name );

  const auto mark = reachable_from_cos( g );
  for ( const auto n : topo_order( g ) )
  {
    if ( !g.is_and( n ) || !mark[n] )
      continue;
    const auto f0 = g.fanin0( n );
    const auto f1 = g.fanin1( n );
    map[n] = out.create_and( map[f0.node()] ^ f0.complemented(), map[f1.node()] ^ f1.complemented() );
  }
  for ( const auto& po : g.pos() )
    out.create_po( map[po.driver.node()] ^ po.driver.complemented(), po.name );
  for ( std::size_t i = 0; i < g.num_latches(); ++i )
  {
    const auto next = g.latches()[i].next;
    out.set_latch_next( i, map[next.node()] ^ next.complemented() );
  }
  out.cleanup();
  return out;
}

const char* to_string( errc code )
{
  switch ( code )
  {
  case errc::parse_error: return "ParseError";
  case errc::unsupported_feature: return "UnsupportedFeature";
  case errc::unsupported_directive: return "UnsupportedDirective";
  case errc::duplicate_cell: return "DuplicateCell";
  case errc::unknown_cell: return "UnknownCell";
  case errc::multiple_drivers: return "MultipleDrivers";
  case errc::undriven_net: return "UndrivenNet";
  case errc::unsupported_operator: return "UnsupportedOperator";
  case errc::width_mismatch: return "WidthMismatch";
  case errc::cycle_detected: return "CycleDetected";
  case errc::stale_candidate: return "StaleCandidate";
  case errc::interface_mismatch: return "InterfaceMismatch";
  case errc::inconsistent_feature: return "InconsistentFeature";
  case errc::io_error: return "IoError";
  case errc::equivalence_failure: return "EquivalenceFailure";
  case errc::no_latches: return "NoLatches";
  case errc::no_network_loaded: return "NoNetworkLoaded";
  case errc::invalid_argument: return "InvalidArgument";
  }
  return "Error";
}

} // namespace aigkit
