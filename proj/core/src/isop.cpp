#include <aigkit/isop.hpp>

#include <algorithm>
#include <bit>
#include <set>

namespace aigkit
{

std::uint32_t cube::num_literals() const
{
  return static_cast<std::uint32_t>( std::popcount( pos ) + std::popcount( neg ) );
}

std::uint32_t literal_count( const sop& cover )
{
  std::uint32_t n = 0;
  for ( const auto& c : cover )
    n += c.num_literals();
  return n;
}

namespace
{

/* returns the cover and the function it implements */
std::pair<sop, truth_table> isop_rec( const truth_table& lower, const truth_table& upper, std::uint32_t top )
{
  if ( lower.is_const0() )
    return { {}, truth_table::constant( lower.num_vars(), false ) };
  if ( upper.is_const1() )
    return { { cube{} }, truth_table::constant( lower.num_vars(), true ) };

  std::uint32_t var = top;
  while ( var-- > 0 )
  {
    if ( lower.depends_on( var ) || upper.depends_on( var ) )
      break;
  }
  const auto l0 = lower.cofactor0( var ), l1 = lower.cofactor1( var );
  const auto u0 = upper.cofactor0( var ), u1 = upper.cofactor1( var );

  auto [c0, t0] = isop_rec( l0 & ~u1, u0, var );
  auto [c1, t1] = isop_rec( l1 & ~u0, u1, var );
  auto [cs, ts] = isop_rec( ( l0 & ~t0 ) | ( l1 & ~t1 ), u0 & u1, var );

  const auto x = truth_table::nth_var( lower.num_vars(), var );
  sop cover;
  cover.reserve( c0.size() + c1.size() + cs.size() );
  for ( auto c : c0 )
  {
    c.neg |= 1u << var;
    cover.push_back( c );
  }
  for ( auto c : c1 )
  {
    c.pos |= 1u << var;
    cover.push_back( c );
  }
  cover.insert( cover.end(), cs.begin(), cs.end() );
  return { std::move( cover ), ( t0 & ~x ) | ( t1 & x ) | ts };
}

/* ---------------- algebraic factoring ---------------- */

cube common_cube( const sop& f )
{
  cube c{ ~0u, ~0u };
  for ( const auto& x : f )
  {
    c.pos &= x.pos;
    c.neg &= x.neg;
  }
  return f.empty() ? cube{} : c;
}

cube cube_divide( const cube& c, const cube& d )
{
  return cube{ c.pos & ~d.pos, c.neg & ~d.neg };
}

void normalize( sop& f )
{
  std::sort( f.begin(), f.end() );
  f.erase( std::unique( f.begin(), f.end() ), f.end() );
}

/* weak (algebraic) division: f = q * d + r */
std::pair<sop, sop> divide( const sop& f, const sop& d )
{
  sop q;
  bool first = true;
  for ( const auto& dc : d )
  {
    sop part;
    for ( const auto& c : f )
    {
      if ( c.contains( dc ) )
        part.push_back( cube_divide( c, dc ) );
    }
    normalize( part );
    if ( first )
    {
      q = std::move( part );
      first = false;
    }
    else
    {
      sop inter;
      std::set_intersection( q.begin(), q.end(), part.begin(), part.end(), std::back_inserter( inter ) );
      q = std::move( inter );
    }
    if ( q.empty() )
      break;
  }
  std::set<cube> product;
  for ( const auto& a : q )
    for ( const auto& b : d )
      product.insert( cube{ a.pos | b.pos, a.neg | b.neg } );
  sop r;
  for ( const auto& c : f )
  {
    if ( !product.count( c ) )
      r.push_back( c );
  }
  return { std::move( q ), std::move( r ) };
}

constexpr std::size_t max_kernels = 64;

/* literal index: 2*var for x_var, 2*var+1 for !x_var */
bool has_literal( const cube& c, std::uint32_t lit )
{
  return ( ( ( lit & 1u ) ? c.neg : c.pos ) >> ( lit >> 1 ) ) & 1u;
}

void collect_kernels( const sop& f, std::uint32_t start, std::uint32_t num_vars, std::vector<sop>& out )
{
  for ( std::uint32_t lit = start; lit < 2 * num_vars && out.size() < max_kernels; ++lit )
  {
    sop with;
    for ( const auto& c : f )
    {
      if ( has_literal( c, lit ) )
        with.push_back( c );
    }
    if ( with.size() < 2 )
      continue;
    const auto cc = common_cube( with );
    bool skip = false;
    for ( std::uint32_t l = 0; l < lit; ++l )
    {
      if ( has_literal( cc, l ) )
      {
        skip = true;
        break;
      }
    }
    if ( skip )
      continue;
    for ( auto& c : with )
      c = cube_divide( c, cc );
    normalize( with );
    collect_kernels( with, lit + 1, num_vars, out );
  }
  if ( f.size() >= 2 && out.size() < max_kernels && common_cube( f ) == cube{} )
  {
    if ( std::find( out.begin(), out.end(), f ) == out.end() )
      out.push_back( f );
  }
}

class factorizer
{
public:
  explicit factorizer( std::uint32_t num_vars ) : num_vars_( num_vars ), b_( num_vars ) {}

  std::uint32_t build( sop f )
  {
    normalize( f );
    if ( f.empty() )
      return subgraph_builder::constant( false );
    for ( const auto& c : f )
    {
      if ( c.num_literals() == 0 )
        return subgraph_builder::constant( true );
    }
    if ( f.size() == 1 )
      return build_cube( f.front() );

    // pull out the common cube first
    const auto cc = common_cube( f );
    if ( cc.num_literals() > 0 )
    {
      for ( auto& c : f )
        c = cube_divide( c, cc );
      return b_.make_and( build_cube( cc ), build( std::move( f ) ) );
    }

    // best kernel by literal savings
    std::vector<sop> kernels;
    collect_kernels( f, 0, num_vars_, kernels );
    const auto total = literal_count( f );
    int best_gain = 0;
    sop best_q, best_k, best_r;
    for ( const auto& k : kernels )
    {
      if ( k == f )
        continue;
      auto [q, r] = divide( f, k );
      if ( q.empty() )
        continue;
      const int gain = static_cast<int>( total ) -
                       static_cast<int>( literal_count( q ) + literal_count( k ) + literal_count( r ) );
      if ( gain > best_gain )
      {
        best_gain = gain;
        best_q = q;
        best_k = k;
        best_r = r;
      }
    }
    if ( best_gain > 0 )
    {
      const auto qk = b_.make_and( build( best_q ), build( best_k ) );
      return b_.make_or( qk, build( best_r ) );
    }

    // most frequent literal appearing in at least two cubes
    std::uint32_t best_lit = 0, best_count = 1;
    for ( std::uint32_t lit = 0; lit < 2 * num_vars_; ++lit )
    {
      std::uint32_t count = 0;
      for ( const auto& c : f )
        count += has_literal( c, lit ) ? 1u : 0u;
      if ( count > best_count )
      {
        best_count = count;
        best_lit = lit;
      }
    }
    if ( best_count >= 2 )
    {
      cube lc;
      ( ( best_lit & 1u ) ? lc.neg : lc.pos ) = 1u << ( best_lit >> 1 );
      sop q, r;
      for ( const auto& c : f )
      {
        if ( c.contains( lc ) )
          q.push_back( cube_divide( c, lc ) );
        else
          r.push_back( c );
      }
      const auto lq = b_.make_and( build_cube( lc ), build( std::move( q ) ) );
      return b_.make_or( lq, build( std::move( r ) ) );
    }

    // disjoint cubes: balanced OR
    std::vector<std::uint32_t> terms;
    for ( const auto& c : f )
      terms.push_back( build_cube( c ) );
    return balanced( terms, true );
  }

  subgraph finish( std::uint32_t root ) const { return b_.finish( root ); }

private:
  std::uint32_t build_cube( const cube& c )
  {
    std::vector<std::uint32_t> lits;
    for ( std::uint32_t v = 0; v < num_vars_; ++v )
    {
      if ( ( c.pos >> v ) & 1u )
        lits.push_back( b_.leaf( v ) );
      if ( ( c.neg >> v ) & 1u )
        lits.push_back( b_.leaf( v ) ^ 1u );
    }
    if ( lits.empty() )
      return subgraph_builder::constant( true );
    return balanced( lits, false );
  }

  std::uint32_t balanced( std::vector<std::uint32_t> lits, bool is_or )
  {
    while ( lits.size() > 1 )
    {
      std::vector<std::uint32_t> next;
      for ( std::size_t i = 0; i + 1 < lits.size(); i += 2 )
        next.push_back( is_or ? b_.make_or( lits[i], lits[i + 1] ) : b_.make_and( lits[i], lits[i + 1] ) );
      if ( lits.size() % 2 )
        next.push_back( lits.back() );
      lits = std::move( next );
    }
    return lits.front();
  }

  std::uint32_t num_vars_;
  subgraph_builder b_;
};

} // namespace

sop isop( const truth_table& lower, const truth_table& upper )
{
  return isop_rec( lower, upper, lower.num_vars() ).first;
}

sop isop( const truth_table& function )
{
  return isop( function, function );
}

truth_table sop_to_truth_table( const sop& cover, std::uint32_t num_vars )
{
  auto result = truth_table::constant( num_vars, false );
  for ( const auto& c : cover )
  {
    auto term = truth_table::constant( num_vars, true );
    for ( std::uint32_t v = 0; v < num_vars; ++v )
    {
      if ( ( c.pos >> v ) & 1u )
        term = term & truth_table::nth_var( num_vars, v );
      if ( ( c.neg >> v ) & 1u )
        term = term & ~truth_table::nth_var( num_vars, v );
    }
    result = result | term;
  }
  return result;
}

subgraph factor( const sop& cover, std::uint32_t num_vars )
{
  factorizer fz( num_vars );
  const auto root = fz.build( cover );
  return fz.finish( root );
}

subgraph factor_function( const truth_table& function )
{
  const auto n = function.num_vars();
  auto pos = factor( isop( function ), n );
  auto neg = factor( isop( ~function ), n );
  neg.root ^= 1u;
  if ( neg.size() < pos.size() || ( neg.size() == pos.size() && neg.depth() < pos.depth() ) )
    return neg;
  return pos;
}

} // namespace aigkit
