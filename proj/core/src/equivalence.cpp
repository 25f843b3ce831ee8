#include <aigkit/cnf.hpp>
#include <aigkit/equivalence.hpp>
#include <aigkit/errors.hpp>

#include <algorithm>
#include <bit>
#include <deque>
#include <random>
#include <unordered_map>
#include <unordered_set>

namespace aigkit
{

namespace
{

enum class naming
{
  none,
  full,
  mixed
};

template<class NameOf>
naming naming_of( std::size_t count, NameOf&& name_of )
{
  std::size_t named = 0;
  std::unordered_set<std::string> seen;
  for ( std::size_t i = 0; i < count; ++i )
  {
    const auto& n = name_of( i );
    if ( n.empty() )
      continue;
    ++named;
    if ( !seen.insert( n ).second )
      return naming::mixed;  // duplicate names cannot be matched
  }
  return named == 0 ? naming::none : named == count ? naming::full : naming::mixed;
}

template<class NameA, class NameB>
std::vector<std::size_t> pair_lists( const char* what, std::size_t count, NameA&& name_a, NameB&& name_b, bool& by_name )
{
  const auto na = naming_of( count, name_a );
  const auto nb = naming_of( count, name_b );
  std::vector<std::size_t> map( count );
  if ( na == naming::mixed || nb == naming::mixed )
    throw error( errc::interface_mismatch, std::string( what ) + " names are incomplete or duplicated; cannot pair ports" );
  if ( na == naming::full && nb == naming::full )
  {
    by_name = true;
    std::unordered_map<std::string, std::size_t> index;
    for ( std::size_t i = 0; i < count; ++i )
      index[name_b( i )] = i;
    for ( std::size_t i = 0; i < count; ++i )
    {
      auto it = index.find( name_a( i ) );
      if ( it == index.end() )
        throw error( errc::interface_mismatch, std::string( what ) + " '" + name_a( i ) + "' has no counterpart" );
      map[i] = it->second;
    }
    return map;
  }
  for ( std::size_t i = 0; i < count; ++i )
    map[i] = i;
  return map;
}

port_pairing pair_interface( const aig& a, const aig& b )
{
  if ( a.num_pis() != b.num_pis() )
    throw error( errc::interface_mismatch, "PI count differs: " + std::to_string( a.num_pis() ) + " vs " +
                                               std::to_string( b.num_pis() ) );
  if ( a.num_pos() != b.num_pos() )
    throw error( errc::interface_mismatch, "PO count differs: " + std::to_string( a.num_pos() ) + " vs " +
                                               std::to_string( b.num_pos() ) );
  port_pairing p;
  bool pi_by_name = false, po_by_name = false;
  p.pi_map = pair_lists( "PI", a.num_pis(), [&]( std::size_t i ) -> const std::string& { return a.pi_name( i ); },
                         [&]( std::size_t i ) -> const std::string& { return b.pi_name( i ); }, pi_by_name );
  p.po_map = pair_lists( "PO", a.num_pos(), [&]( std::size_t i ) -> const std::string& { return a.pos()[i].name; },
                         [&]( std::size_t i ) -> const std::string& { return b.pos()[i].name; }, po_by_name );
  p.by_name = pi_by_name || po_by_name;
  return p;
}

/* copies src into dst with the given CI literals; returns the literal of every src node */
std::vector<literal> copy_into( const aig& src, aig& dst, const std::vector<literal>& ci_lits )
{
  std::vector<literal> map( src.size(), const_false );
  for ( std::size_t i = 0; i < src.num_cis(); ++i )
    map[src.ci_at( i )] = ci_lits[i];
  for ( const auto n : topo_order( src ) )
  {
    if ( !src.is_and( n ) )
      continue;
    const auto f0 = src.fanin0( n ), f1 = src.fanin1( n );
    map[n] = dst.create_and( map[f0.node()] ^ f0.complemented(), map[f1.node()] ^ f1.complemented() );
  }
  return map;
}

literal mapped( const std::vector<literal>& map, literal l ) { return map[l.node()] ^ l.complemented(); }

bool bit_of( const std::vector<std::uint64_t>& words, std::size_t row, std::size_t num_words, std::size_t pattern )
{
  return ( ( words[row * num_words + pattern / 64] >> ( pattern % 64 ) ) & 1u ) != 0;
}

} // namespace

port_pairing pair_ports( const aig& a, const aig& b )
{
  if ( a.num_latches() != b.num_latches() )
    throw error( errc::interface_mismatch, "latch count differs: " + std::to_string( a.num_latches() ) + " vs " +
                                               std::to_string( b.num_latches() ) );
  return pair_interface( a, b );
}

miter build_miter( const aig& a, const aig& b )
{
  miter m;
  m.pairing = pair_ports( a, b );
  m.network = aig( "miter" );
  std::vector<literal> ci_a, ci_b( b.num_cis() );
  for ( std::size_t i = 0; i < a.num_pis(); ++i )
    ci_a.push_back( m.network.create_pi( a.pi_name( i ) ) );
  for ( std::size_t i = 0; i < a.num_latches(); ++i )
    ci_a.push_back( m.network.create_pi( "latch" + std::to_string( i ) ) );
  for ( std::size_t i = 0; i < a.num_pis(); ++i )
    ci_b[m.pairing.pi_map[i]] = ci_a[i];
  for ( std::size_t i = 0; i < a.num_latches(); ++i )
    ci_b[b.num_pis() + i] = ci_a[a.num_pis() + i];
  const auto map_a = copy_into( a, m.network, ci_a );
  const auto map_b = copy_into( b, m.network, ci_b );
  for ( std::size_t i = 0; i < a.num_pos(); ++i )
  {
    const auto la = mapped( map_a, a.co_at( i ) );
    const auto lb = mapped( map_b, b.co_at( m.pairing.po_map[i] ) );
    m.differences.push_back( m.network.create_xor( la, lb ) );
  }
  for ( std::size_t i = 0; i < a.num_latches(); ++i )
  {
    const auto la = mapped( map_a, a.co_at( a.num_pos() + i ) );
    const auto lb = mapped( map_b, b.co_at( b.num_pos() + i ) );
    m.differences.push_back( m.network.create_xor( la, lb ) );
  }
  auto any = const_false;
  for ( const auto d : m.differences )
    any = m.network.create_or( any, d );
  m.network.create_po( any, "miter" );
  m.network.cleanup();
  return m;
}

const char* to_string( cec_verdict v )
{
  switch ( v )
  {
  case cec_verdict::equivalent: return "equivalent";
  case cec_verdict::not_equivalent: return "not equivalent";
  default: return "unknown";
  }
}

std::vector<bool> evaluate( const aig& g, const std::vector<bool>& ci_values )
{
  std::vector<std::uint64_t> words( g.num_cis() );
  for ( std::size_t i = 0; i < words.size(); ++i )
    words[i] = ( i < ci_values.size() && ci_values[i] ) ? 1u : 0u;
  const auto out = simulate( g, words );
  std::vector<bool> r( out.size() );
  for ( std::size_t i = 0; i < out.size(); ++i )
    r[i] = ( out[i] & 1u ) != 0;
  return r;
}

namespace
{

/* true if the assignment makes some paired output of a and b differ */
bool distinguishes( const aig& a, const aig& b, const port_pairing& p, const std::vector<bool>& cex )
{
  std::vector<bool> cb( b.num_cis() );
  for ( std::size_t i = 0; i < a.num_pis(); ++i )
    cb[p.pi_map[i]] = cex[i];
  for ( std::size_t i = 0; i < a.num_latches(); ++i )
    cb[b.num_pis() + i] = cex[a.num_pis() + i];
  const auto oa = evaluate( a, cex );
  const auto ob = evaluate( b, cb );
  for ( std::size_t i = 0; i < a.num_pos(); ++i )
  {
    if ( oa[i] != ob[p.po_map[i]] )
      return true;
  }
  for ( std::size_t i = 0; i < a.num_latches(); ++i )
  {
    if ( oa[a.num_pos() + i] != ob[b.num_pos() + i] )
      return true;
  }
  return false;
}

/* scans node-major simulation words for the first difference; fills the result on success */
bool find_difference( const miter& m, const std::vector<std::uint64_t>& node_words,
                      const std::vector<std::uint64_t>& ci_words, std::size_t num_words, std::size_t num_patterns,
                      cec_result& r )
{
  for ( std::size_t d = 0; d < m.differences.size(); ++d )
  {
    const auto l = m.differences[d];
    for ( std::size_t w = 0; w < num_words; ++w )
    {
      auto word = node_words[l.node() * num_words + w] ^ ( l.complemented() ? ~0ull : 0ull );
      if ( w * 64 + 64 > num_patterns )
        word &= ( num_patterns - w * 64 >= 64 ) ? ~0ull : ( ( 1ull << ( num_patterns - w * 64 ) ) - 1 );
      if ( word == 0 )
        continue;
      const auto pattern = w * 64 + static_cast<std::size_t>( std::countr_zero( word ) );
      r.counterexample.assign( m.network.num_pis(), false );
      for ( std::size_t i = 0; i < m.network.num_pis(); ++i )
        r.counterexample[i] = bit_of( ci_words, i, num_words, pattern );
      r.failing_output = d;
      r.verdict = cec_verdict::not_equivalent;
      return true;
    }
  }
  return false;
}

} // namespace

cec_result cec( const aig& a, const aig& b, const cec_params& ps )
{
  const auto m = build_miter( a, b );
  const auto n = m.network.num_pis();
  cec_result r;

  auto finish = [&]( cec_result& res ) -> cec_result {
    if ( res.verdict == cec_verdict::not_equivalent && !distinguishes( a, b, m.pairing, res.counterexample ) )
      throw error( errc::equivalence_failure, "internal error: counterexample does not distinguish the networks" );
    return res;
  };

  if ( m.network.co_at( 0 ) == const_false )
  {
    r.verdict = cec_verdict::equivalent;
    r.method = "structural";
    return r;
  }

  if ( n <= ps.exhaustive_threshold && !ps.force_sat )
  {
    r.method = "exhaustive";
    const std::size_t patterns = std::size_t{ 1 } << n;
    const std::size_t num_words = std::max<std::size_t>( 1, patterns / 64 );
    std::vector<std::uint64_t> ci( n * num_words, 0 );
    for ( std::size_t i = 0; i < n; ++i )
    {
      for ( std::size_t w = 0; w < num_words; ++w )
      {
        std::uint64_t word = 0;
        for ( std::size_t bit = 0; bit < 64; ++bit )
        {
          const auto pattern = ( w * 64 + bit ) % patterns;
          word |= static_cast<std::uint64_t>( ( pattern >> i ) & 1u ) << bit;
        }
        ci[i * num_words + w] = word;
      }
    }
    const auto values = simulate_nodes( m.network, ci, num_words );
    if ( find_difference( m, values, ci, num_words, patterns, r ) )
      return finish( r );
    r.verdict = cec_verdict::equivalent;
    return r;
  }

  // random simulation hunting for a cheap counterexample
  if ( ps.random_words > 0 )
  {
    std::mt19937_64 rng( ps.seed );
    std::vector<std::uint64_t> ci( n * ps.random_words );
    for ( auto& w : ci )
      w = rng();
    const auto values = simulate_nodes( m.network, ci, ps.random_words );
    if ( find_difference( m, values, ci, ps.random_words, std::size_t{ ps.random_words } * 64, r ) )
    {
      r.method = "simulation";
      return finish( r );
    }
  }

  // complete search, one output at a time, sharing learnt clauses
  r.method = "sat";
  const auto enc = tseitin( m.network, m.differences );
  sat_solver solver;
  for ( const auto& c : enc.formula.clauses )
    solver.add_clause( c );
  bool unknown = false;
  for ( std::size_t d = 0; d < m.differences.size(); ++d )
  {
    const auto l = m.differences[d];
    if ( l == const_false )
      continue;
    const int assumption = enc.lit( l );
    const auto res = solver.solve( std::span<const int>( &assumption, 1 ), ps.limits );
    if ( res.status == sat_status::unsat )
    {
      solver.add_clause( { -assumption } );
      continue;
    }
    if ( res.status == sat_status::unknown )
    {
      unknown = true;
      continue;
    }
    r.counterexample.assign( n, false );
    for ( std::size_t i = 0; i < n; ++i )
    {
      const auto v = enc.node_var[m.network.pis()[i]];
      r.counterexample[i] = v != 0 && res.model[static_cast<std::size_t>( v )];
    }
    r.failing_output = d;
    r.verdict = cec_verdict::not_equivalent;
    return finish( r );
  }
  r.verdict = unknown ? cec_verdict::unknown : cec_verdict::equivalent;
  return r;
}

cnf_formula miter_cnf( const aig& a, const aig& b )
{
  const auto m = build_miter( a, b );
  const auto out = m.network.co_at( 0 );
  const std::vector<literal> roots{ out };
  auto enc = tseitin( m.network, roots );
  enc.formula.add_clause( { enc.lit( out ) } );
  return enc.formula;
}

/* ---------------- bounded sequential equivalence ---------------- */

namespace
{

struct seq_machine
{
  const aig& g;
  std::vector<std::uint64_t> state;  // one word per latch

  explicit seq_machine( const aig& net ) : g( net ) { reset(); }
  void reset()
  {
    state.assign( g.num_latches(), 0 );
    for ( std::size_t i = 0; i < g.num_latches(); ++i )
      state[i] = g.latches()[i].init == 1 ? ~0ull : 0ull;
  }
  /* returns PO words and advances the state */
  std::vector<std::uint64_t> step( const std::vector<std::uint64_t>& pi_words )
  {
    std::vector<std::uint64_t> ci( pi_words );
    ci.insert( ci.end(), state.begin(), state.end() );
    auto co = simulate( g, ci );
    std::copy( co.begin() + static_cast<std::ptrdiff_t>( g.num_pos() ), co.end(), state.begin() );
    co.resize( g.num_pos() );
    return co;
  }
};

std::optional<std::pair<std::size_t, std::size_t>> first_mismatch( const std::vector<std::uint64_t>& oa,
                                                                   const std::vector<std::uint64_t>& ob,
                                                                   const port_pairing& p, std::uint64_t mask )
{
  for ( std::size_t i = 0; i < oa.size(); ++i )
  {
    const auto diff = ( oa[i] ^ ob[p.po_map[i]] ) & mask;
    if ( diff )
      return std::make_pair( i, static_cast<std::size_t>( std::countr_zero( diff ) ) );
  }
  return std::nullopt;
}

std::vector<std::uint64_t> permute_pis( const std::vector<std::uint64_t>& words_a, const port_pairing& p )
{
  std::vector<std::uint64_t> wb( words_a.size() );
  for ( std::size_t i = 0; i < words_a.size(); ++i )
    wb[p.pi_map[i]] = words_a[i];
  return wb;
}

} // namespace

seq_equiv_result bounded_seq_equiv( const aig& a, const aig& b, const seq_equiv_params& ps )
{
  const auto pairing = pair_interface( a, b );
  seq_equiv_result result;
  const auto npi = a.num_pis();

  // random sequences, 64 per batch
  std::mt19937_64 rng( ps.seed );
  for ( std::uint32_t done = 0; done < ps.vectors; done += 64 )
  {
    const auto lanes = std::min<std::uint32_t>( 64, ps.vectors - done );
    const auto mask = lanes == 64 ? ~0ull : ( ( 1ull << lanes ) - 1 );
    seq_machine ma( a ), mb( b );
    std::vector<std::vector<std::uint64_t>> history;
    for ( std::uint32_t t = 0; t < ps.depth; ++t )
    {
      std::vector<std::uint64_t> in( npi );
      for ( auto& w : in )
        w = rng();
      history.push_back( in );
      const auto oa = ma.step( in );
      const auto ob = mb.step( permute_pis( in, pairing ) );
      if ( const auto mm = first_mismatch( oa, ob, pairing, mask ) )
      {
        seq_trace tr;
        for ( const auto& h : history )
        {
          std::vector<bool> v( npi );
          for ( std::size_t i = 0; i < npi; ++i )
            v[i] = ( ( h[i] >> mm->second ) & 1u ) != 0;
          tr.inputs.push_back( std::move( v ) );
        }
        tr.failing_step = t;
        tr.failing_output = mm->first;
        result.trace = std::move( tr );
        return result;
      }
    }
  }

  // exhaustive breadth-first sweep over reachable product states
  if ( a.num_latches() <= ps.exhaustive_max_latches && b.num_latches() <= ps.exhaustive_max_latches &&
       npi <= ps.exhaustive_max_pis )
  {
    result.exhaustive = true;
    const auto la = a.num_latches(), lb = b.num_latches();
    auto encode = []( const std::vector<std::uint64_t>& sa, const std::vector<std::uint64_t>& sb, std::size_t lane ) {
      std::uint32_t key = 0, bit = 0;
      for ( const auto w : sa )
        key |= static_cast<std::uint32_t>( ( w >> lane ) & 1u ) << bit++;
      for ( const auto w : sb )
        key |= static_cast<std::uint32_t>( ( w >> lane ) & 1u ) << bit++;
      return key;
    };
    auto decode = [&]( std::uint32_t key, seq_machine& ma, seq_machine& mb ) {
      for ( std::size_t i = 0; i < la; ++i )
        ma.state[i] = ( ( key >> i ) & 1u ) ? ~0ull : 0ull;
      for ( std::size_t i = 0; i < lb; ++i )
        mb.state[i] = ( ( key >> ( la + i ) ) & 1u ) ? ~0ull : 0ull;
    };
    struct origin
    {
      std::uint32_t parent;
      std::uint32_t input;
    };
    std::unordered_map<std::uint32_t, origin> visited;
    seq_machine ma( a ), mb( b );
    const auto start = encode( ma.state, mb.state, 0 );
    visited[start] = { start, 0 };
    std::vector<std::uint32_t> frontier{ start };
    const std::size_t patterns = std::size_t{ 1 } << npi;
    const std::size_t batches = ( patterns + 63 ) / 64;

    auto build_trace = [&]( std::uint32_t state, std::uint32_t input, std::size_t step, std::size_t po ) {
      std::vector<std::uint32_t> inputs{ input };
      while ( state != start )
      {
        const auto& o = visited.at( state );
        inputs.push_back( o.input );
        state = o.parent;
      }
      std::reverse( inputs.begin(), inputs.end() );
      seq_trace tr;
      for ( const auto in : inputs )
      {
        std::vector<bool> v( npi );
        for ( std::size_t i = 0; i < npi; ++i )
          v[i] = ( ( in >> i ) & 1u ) != 0;
        tr.inputs.push_back( std::move( v ) );
      }
      tr.failing_step = step;
      tr.failing_output = po;
      return tr;
    };

    for ( std::uint32_t t = 0; t < ps.depth && !frontier.empty(); ++t )
    {
      std::vector<std::uint32_t> next_frontier;
      for ( const auto s : frontier )
      {
        for ( std::size_t batch = 0; batch < batches; ++batch )
        {
          const auto lanes = std::min<std::size_t>( 64, patterns - batch * 64 );
          const auto mask = lanes == 64 ? ~0ull : ( ( 1ull << lanes ) - 1 );
          std::vector<std::uint64_t> in( npi, 0 );
          for ( std::size_t lane = 0; lane < lanes; ++lane )
          {
            const auto pattern = batch * 64 + lane;
            for ( std::size_t i = 0; i < npi; ++i )
              in[i] |= static_cast<std::uint64_t>( ( pattern >> i ) & 1u ) << lane;
          }
          decode( s, ma, mb );
          const auto oa = ma.step( in );
          const auto ob = mb.step( permute_pis( in, pairing ) );
          if ( const auto mm = first_mismatch( oa, ob, pairing, mask ) )
          {
            result.trace = build_trace( s, static_cast<std::uint32_t>( batch * 64 + mm->second ), t, mm->first );
            return result;
          }
          for ( std::size_t lane = 0; lane < lanes; ++lane )
          {
            const auto key = encode( ma.state, mb.state, lane );
            if ( visited.emplace( key, origin{ s, static_cast<std::uint32_t>( batch * 64 + lane ) } ).second )
              next_frontier.push_back( key );
          }
        }
      }
      frontier = std::move( next_frontier );
    }
  }
  result.equivalent = true;
  result.depth = ps.depth;
  return result;
}

bool trace_distinguishes( const aig& a, const aig& b, const seq_trace& t )
{
  const auto pairing = pair_interface( a, b );
  seq_machine ma( a ), mb( b );
  for ( std::size_t step = 0; step < t.inputs.size(); ++step )
  {
    std::vector<std::uint64_t> in( a.num_pis() );
    for ( std::size_t i = 0; i < in.size(); ++i )
      in[i] = t.inputs[step][i] ? 1u : 0u;
    const auto oa = ma.step( in );
    const auto ob = mb.step( permute_pis( in, pairing ) );
    if ( step == t.failing_step )
      return ( ( oa[t.failing_output] ^ ob[pairing.po_map[t.failing_output]] ) & 1u ) != 0;
  }
  return false;
}

} // namespace aigkit
