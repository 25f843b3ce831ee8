#include <aigkit/errors.hpp>
#include <aigkit/sat_solver.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <sstream>

namespace aigkit
{

std::string cnf_formula::to_dimacs() const
{
  std::ostringstream os;
  os << "p cnf " << num_vars << ' ' << clauses.size() << '\n';
  for ( const auto& c : clauses )
  {
    for ( const auto l : c )
      os << l << ' ';
    os << "0\n";
  }
  return os.str();
}

cnf_formula read_dimacs( std::string_view text )
{
  cnf_formula f;
  std::istringstream is{ std::string( text ) };
  std::string line;
  std::size_t line_no = 0;
  bool header = false;
  std::vector<int> current;
  while ( std::getline( is, line ) )
  {
    ++line_no;
    std::istringstream ls( line );
    std::string first;
    if ( !( ls >> first ) || first[0] == 'c' || first[0] == '%' )
      continue;
    if ( first == "p" )
    {
      std::string fmt;
      long long v = -1, c = -1;
      if ( header || !( ls >> fmt >> v >> c ) || fmt != "cnf" || v < 0 || c < 0 )
        throw parse_error( line_no, "malformed problem line" );
      f.num_vars = static_cast<std::uint32_t>( v );
      header = true;
      continue;
    }
    if ( !header )
      throw parse_error( line_no, "clause before the 'p cnf' line" );
    std::istringstream cs( line );
    long long lit;
    while ( cs >> lit )
    {
      if ( lit == 0 )
      {
        f.clauses.push_back( std::move( current ) );
        current.clear();
        continue;
      }
      if ( std::llabs( lit ) > f.num_vars )
        throw parse_error( line_no, "literal " + std::to_string( lit ) + " exceeds the declared variable count" );
      current.push_back( static_cast<int>( lit ) );
    }
    if ( !cs.eof() )
      throw parse_error( line_no, "unexpected token in clause" );
  }
  if ( !current.empty() )
    f.clauses.push_back( std::move( current ) );
  return f;
}

bool satisfies( const cnf_formula& f, const std::vector<bool>& model )
{
  for ( const auto& c : f.clauses )
  {
    const bool sat = std::any_of( c.begin(), c.end(), [&]( int l ) {
      const auto v = static_cast<std::size_t>( std::abs( l ) );
      return v < model.size() && model[v] == ( l > 0 );
    } );
    if ( !sat )
      return false;
  }
  return true;
}

namespace
{

using lit_t = std::uint32_t;  // 2*var + negated, var 0-based
using cref_t = std::uint32_t;
constexpr cref_t no_reason = ~cref_t{ 0 };
constexpr std::uint8_t v_false = 0, v_true = 1, v_undef = 2;

inline lit_t to_lit( int dimacs ) { return ( static_cast<lit_t>( std::abs( dimacs ) - 1 ) << 1 ) | ( dimacs < 0 ? 1u : 0u ); }
inline std::uint32_t var_of( lit_t l ) { return l >> 1; }
inline lit_t neg( lit_t l ) { return l ^ 1u; }

double luby( double y, int x )
{
  int size = 1, seq = 0;
  while ( size < x + 1 )
  {
    ++seq;
    size = 2 * size + 1;
  }
  while ( size - 1 != x )
  {
    size = ( size - 1 ) >> 1;
    --seq;
    x = x % size;
  }
  double r = 1.0;
  for ( int i = 0; i < seq; ++i )
    r *= y;
  return r;
}

} // namespace

struct sat_solver::impl
{
  struct clause
  {
    std::vector<lit_t> lits;
    bool learnt{ false };
    bool deleted{ false };
    double activity{ 0.0 };
  };
  struct watcher
  {
    cref_t cref;
    lit_t blocker;
  };

  std::vector<clause> clauses;
  std::vector<cref_t> learnts;
  std::vector<std::vector<watcher>> watches;  // indexed by literal p: clauses watching neg(p)
  std::vector<std::uint8_t> assigns;
  std::vector<std::uint8_t> phase;
  std::vector<int> level;
  std::vector<cref_t> reason;
  std::vector<double> activity;
  std::vector<char> seen;
  std::vector<lit_t> trail;
  std::vector<std::size_t> trail_lim;
  std::size_t qhead{ 0 };
  bool ok{ true };

  double var_inc{ 1.0 }, var_decay{ 0.95 };
  double cla_inc{ 1.0 }, cla_decay{ 0.999 };
  double max_learnts{ 0.0 };

  // max-heap of variables by activity
  std::vector<std::uint32_t> heap;
  std::vector<int> heap_pos;

  std::uint64_t conflicts{ 0 }, decisions{ 0 }, propagations{ 0 };

  std::uint8_t value( lit_t l ) const
  {
    const auto a = assigns[var_of( l )];
    return a == v_undef ? v_undef : static_cast<std::uint8_t>( a ^ ( l & 1u ) );
  }
  int decision_level() const { return static_cast<int>( trail_lim.size() ); }

  /* heap */
  bool heap_less( std::uint32_t a, std::uint32_t b ) const { return activity[a] > activity[b]; }
  void heap_up( std::size_t i )
  {
    const auto v = heap[i];
    while ( i > 0 )
    {
      const auto p = ( i - 1 ) / 2;
      if ( !heap_less( v, heap[p] ) )
        break;
      heap[i] = heap[p];
      heap_pos[heap[i]] = static_cast<int>( i );
      i = p;
    }
    heap[i] = v;
    heap_pos[v] = static_cast<int>( i );
  }
  void heap_down( std::size_t i )
  {
    const auto v = heap[i];
    while ( true )
    {
      auto c = 2 * i + 1;
      if ( c >= heap.size() )
        break;
      if ( c + 1 < heap.size() && heap_less( heap[c + 1], heap[c] ) )
        ++c;
      if ( !heap_less( heap[c], v ) )
        break;
      heap[i] = heap[c];
      heap_pos[heap[i]] = static_cast<int>( i );
      i = c;
    }
    heap[i] = v;
    heap_pos[v] = static_cast<int>( i );
  }
  void heap_insert( std::uint32_t v )
  {
    if ( heap_pos[v] >= 0 )
      return;
    heap.push_back( v );
    heap_pos[v] = static_cast<int>( heap.size() - 1 );
    heap_up( heap.size() - 1 );
  }
  std::uint32_t heap_pop()
  {
    const auto top = heap[0];
    heap_pos[top] = -1;
    const auto last = heap.back();
    heap.pop_back();
    if ( !heap.empty() )
    {
      heap[0] = last;
      heap_pos[last] = 0;
      heap_down( 0 );
    }
    return top;
  }

  void bump_var( std::uint32_t v )
  {
    if ( ( activity[v] += var_inc ) > 1e100 )
    {
      for ( auto& a : activity )
        a *= 1e-100;
      var_inc *= 1e-100;
    }
    if ( heap_pos[v] >= 0 )
      heap_up( static_cast<std::size_t>( heap_pos[v] ) );
  }
  void bump_clause( clause& c )
  {
    if ( ( c.activity += cla_inc ) > 1e20 )
    {
      for ( const auto cr : learnts )
        clauses[cr].activity *= 1e-20;
      cla_inc *= 1e-20;
    }
  }

  std::uint32_t new_var()
  {
    const auto v = static_cast<std::uint32_t>( assigns.size() );
    assigns.push_back( v_undef );
    phase.push_back( 0 );
    level.push_back( 0 );
    reason.push_back( no_reason );
    activity.push_back( 0.0 );
    seen.push_back( 0 );
    watches.emplace_back();
    watches.emplace_back();
    heap_pos.push_back( -1 );
    heap_insert( v );
    return v + 1;
  }

  void enqueue( lit_t p, cref_t from )
  {
    const auto v = var_of( p );
    assigns[v] = static_cast<std::uint8_t>( ( p & 1u ) ? v_false : v_true );
    level[v] = decision_level();
    reason[v] = from;
    trail.push_back( p );
  }

  void attach( cref_t cr )
  {
    const auto& c = clauses[cr].lits;
    watches[neg( c[0] )].push_back( { cr, c[1] } );
    watches[neg( c[1] )].push_back( { cr, c[0] } );
  }

  cref_t propagate()
  {
    cref_t conflict = no_reason;
    while ( qhead < trail.size() )
    {
      const auto p = trail[qhead++];
      const auto false_lit = neg( p );
      auto& ws = watches[p];
      ++propagations;
      std::size_t i = 0, j = 0;
      while ( i < ws.size() )
      {
        const auto w = ws[i];
        if ( value( w.blocker ) == v_true )
        {
          ws[j++] = ws[i++];
          continue;
        }
        auto& c = clauses[w.cref].lits;
        if ( c[0] == false_lit )
          std::swap( c[0], c[1] );
        ++i;
        const auto first = c[0];
        if ( first != w.blocker && value( first ) == v_true )
        {
          ws[j++] = { w.cref, first };
          continue;
        }
        bool moved = false;
        for ( std::size_t k = 2; k < c.size(); ++k )
        {
          if ( value( c[k] ) != v_false )
          {
            std::swap( c[1], c[k] );
            watches[neg( c[1] )].push_back( { w.cref, first } );
            moved = true;
            break;
          }
        }
        if ( moved )
          continue;
        ws[j++] = { w.cref, first };
        if ( value( first ) == v_false )
        {
          conflict = w.cref;
          qhead = trail.size();
          while ( i < ws.size() )
            ws[j++] = ws[i++];
        }
        else
        {
          enqueue( first, w.cref );
        }
      }
      ws.resize( j );
      if ( conflict != no_reason )
        break;
    }
    return conflict;
  }

  void cancel_until( int lvl )
  {
    if ( decision_level() <= lvl )
      return;
    for ( auto i = trail.size(); i > trail_lim[static_cast<std::size_t>( lvl )]; --i )
    {
      const auto v = var_of( trail[i - 1] );
      phase[v] = assigns[v];
      assigns[v] = v_undef;
      reason[v] = no_reason;
      heap_insert( v );
    }
    trail.resize( trail_lim[static_cast<std::size_t>( lvl )] );
    trail_lim.resize( static_cast<std::size_t>( lvl ) );
    qhead = trail.size();
  }

  /* a literal is redundant if its reason's other literals are all in the clause or at level 0 */
  bool redundant( lit_t p ) const
  {
    const auto r = reason[var_of( p )];
    if ( r == no_reason )
      return false;
    const auto& c = clauses[r].lits;
    for ( std::size_t k = 1; k < c.size(); ++k )
    {
      const auto v = var_of( c[k] );
      if ( !seen[v] && level[v] > 0 )
        return false;
    }
    return true;
  }

  void analyze( cref_t confl, std::vector<lit_t>& out, int& bt_level )
  {
    out.assign( 1, 0 );
    int path = 0;
    lit_t p = 0;
    bool have_p = false;
    auto index = trail.size();
    do
    {
      auto& c = clauses[confl];
      if ( c.learnt )
        bump_clause( c );
      for ( std::size_t k = have_p ? 1 : 0; k < c.lits.size(); ++k )
      {
        const auto q = c.lits[k];
        const auto v = var_of( q );
        if ( !seen[v] && level[v] > 0 )
        {
          bump_var( v );
          seen[v] = 1;
          if ( level[v] >= decision_level() )
            ++path;
          else
            out.push_back( q );
        }
      }
      while ( !seen[var_of( trail[--index] )] )
        ;
      p = trail[index];
      have_p = true;
      confl = reason[var_of( p )];
      seen[var_of( p )] = 0;
      --path;
    } while ( path > 0 );
    out[0] = neg( p );

    std::vector<lit_t> kept{ out[0] };
    for ( std::size_t k = 1; k < out.size(); ++k )
    {
      if ( !redundant( out[k] ) )
        kept.push_back( out[k] );
    }
    for ( std::size_t k = 1; k < out.size(); ++k )
      seen[var_of( out[k] )] = 0;
    out = std::move( kept );

    bt_level = 0;
    if ( out.size() > 1 )
    {
      std::size_t max_i = 1;
      for ( std::size_t k = 2; k < out.size(); ++k )
      {
        if ( level[var_of( out[k] )] > level[var_of( out[max_i] )] )
          max_i = k;
      }
      std::swap( out[1], out[max_i] );
      bt_level = level[var_of( out[1] )];
    }
  }

  bool locked( cref_t cr ) const
  {
    const auto& c = clauses[cr].lits;
    const auto v = var_of( c[0] );
    return reason[v] == cr && value( c[0] ) == v_true;
  }

  void reduce_db()
  {
    std::sort( learnts.begin(), learnts.end(), [&]( cref_t a, cref_t b ) {
      const auto& ca = clauses[a];
      const auto& cb = clauses[b];
      if ( ( ca.lits.size() > 2 ) != ( cb.lits.size() > 2 ) )
        return ca.lits.size() > 2;
      return ca.activity < cb.activity;
    } );
    const auto half = learnts.size() / 2;
    std::vector<cref_t> kept;
    for ( std::size_t i = 0; i < learnts.size(); ++i )
    {
      auto& c = clauses[learnts[i]];
      if ( i < half && c.lits.size() > 2 && !locked( learnts[i] ) )
      {
        c.deleted = true;
        c.lits.clear();
        c.lits.shrink_to_fit();
      }
      else
      {
        kept.push_back( learnts[i] );
      }
    }
    learnts = std::move( kept );
    for ( auto& ws : watches )
    {
      ws.erase( std::remove_if( ws.begin(), ws.end(), [&]( const watcher& w ) { return clauses[w.cref].deleted; } ),
                ws.end() );
    }
  }

  bool add_clause( std::span<const int> input )
  {
    if ( !ok )
      return false;
    cancel_until( 0 );
    std::vector<lit_t> c;
    for ( const auto d : input )
    {
      if ( d == 0 )
        throw error( errc::invalid_argument, "clause literal 0 is not allowed" );
      while ( static_cast<std::uint32_t>( std::abs( d ) ) > assigns.size() )
        new_var();
      c.push_back( to_lit( d ) );
    }
    std::sort( c.begin(), c.end() );
    std::vector<lit_t> out;
    for ( std::size_t i = 0; i < c.size(); ++i )
    {
      if ( value( c[i] ) == v_true || ( i + 1 < c.size() && c[i + 1] == neg( c[i] ) ) )
        return true;  // satisfied or tautology
      if ( value( c[i] ) == v_false || ( !out.empty() && out.back() == c[i] ) )
        continue;
      out.push_back( c[i] );
    }
    if ( out.empty() )
      return ok = false;
    if ( out.size() == 1 )
    {
      enqueue( out[0], no_reason );
      return ok = ( propagate() == no_reason );
    }
    clauses.push_back( { std::move( out ), false, false, 0.0 } );
    attach( static_cast<cref_t>( clauses.size() - 1 ) );
    return true;
  }

  sat_result solve( std::span<const int> assumptions_in, const sat_limits& limits )
  {
    using clock = std::chrono::steady_clock;
    const auto start = clock::now();
    const auto c0 = conflicts, d0 = decisions, p0 = propagations;
    sat_result result;
    auto finish = [&]( sat_status s ) {
      result.status = s;
      result.conflicts = conflicts - c0;
      result.decisions = decisions - d0;
      result.propagations = propagations - p0;
      if ( s == sat_status::sat )
      {
        result.model.assign( assigns.size() + 1, false );
        for ( std::size_t v = 0; v < assigns.size(); ++v )
          result.model[v + 1] = assigns[v] == v_true;
      }
      cancel_until( 0 );
      return result;
    };
    if ( !ok )
      return finish( sat_status::unsat );
    std::vector<lit_t> assumptions;
    for ( const auto a : assumptions_in )
    {
      while ( static_cast<std::uint32_t>( std::abs( a ) ) > assigns.size() )
        new_var();
      assumptions.push_back( to_lit( a ) );
    }
    if ( max_learnts == 0.0 )
      max_learnts = std::max( 2000.0, static_cast<double>( clauses.size() ) / 3.0 );

    int restart = 0;
    std::vector<lit_t> learnt;
    while ( true )
    {
      const auto budget = static_cast<std::uint64_t>( luby( 2.0, restart++ ) * 100.0 );
      std::uint64_t local = 0;
      while ( true )
      {
        const auto confl = propagate();
        if ( confl != no_reason )
        {
          ++conflicts;
          ++local;
          if ( decision_level() == 0 )
          {
            ok = false;
            return finish( sat_status::unsat );
          }
          int bt = 0;
          analyze( confl, learnt, bt );
          cancel_until( bt );
          if ( learnt.size() == 1 )
          {
            enqueue( learnt[0], no_reason );
          }
          else
          {
            clauses.push_back( { learnt, true, false, 0.0 } );
            const auto cr = static_cast<cref_t>( clauses.size() - 1 );
            learnts.push_back( cr );
            attach( cr );
            bump_clause( clauses[cr] );
            enqueue( learnt[0], cr );
          }
          var_inc /= var_decay;
          cla_inc /= cla_decay;
          if ( limits.max_conflicts && conflicts - c0 >= limits.max_conflicts )
            return finish( sat_status::unknown );
          if ( limits.max_seconds > 0.0 && ( conflicts & 255u ) == 0 &&
               std::chrono::duration<double>( clock::now() - start ).count() > limits.max_seconds )
            return finish( sat_status::unknown );
          continue;
        }
        if ( local >= budget )
        {
          cancel_until( 0 );
          break;
        }
        if ( static_cast<double>( learnts.size() ) - static_cast<double>( trail.size() ) >= max_learnts )
        {
          reduce_db();
          max_learnts *= 1.1;
        }
        lit_t next = 0;
        bool have_next = false;
        while ( static_cast<std::size_t>( decision_level() ) < assumptions.size() )
        {
          const auto a = assumptions[static_cast<std::size_t>( decision_level() )];
          if ( value( a ) == v_true )
          {
            trail_lim.push_back( trail.size() );  // dummy level
          }
          else if ( value( a ) == v_false )
          {
            return finish( sat_status::unsat );
          }
          else
          {
            next = a;
            have_next = true;
            break;
          }
        }
        if ( !have_next )
        {
          while ( !heap.empty() )
          {
            const auto v = heap_pop();
            if ( assigns[v] == v_undef )
            {
              next = ( v << 1 ) | ( phase[v] == v_true ? 0u : 1u );
              have_next = true;
              break;
            }
          }
          if ( !have_next )
            return finish( sat_status::sat );
        }
        ++decisions;
        trail_lim.push_back( trail.size() );
        enqueue( next, no_reason );
      }
    }
  }
};

sat_solver::sat_solver() : impl_( std::make_unique<impl>() ) {}
sat_solver::~sat_solver() = default;

std::uint32_t sat_solver::new_var() { return impl_->new_var(); }
std::uint32_t sat_solver::num_vars() const { return static_cast<std::uint32_t>( impl_->assigns.size() ); }
bool sat_solver::add_clause( std::span<const int> clause ) { return impl_->add_clause( clause ); }
sat_result sat_solver::solve( std::span<const int> assumptions, const sat_limits& limits )
{
  return impl_->solve( assumptions, limits );
}

sat_result sat_solve( const cnf_formula& f, const sat_limits& limits )
{
  sat_solver s;
  while ( s.num_vars() < f.num_vars )
    s.new_var();
  for ( const auto& c : f.clauses )
  {
    if ( !s.add_clause( c ) )
      break;
  }
  auto r = s.solve( {}, limits );
  if ( r.status == sat_status::sat )
  {
    r.model.resize( f.num_vars + 1, false );
    if ( !satisfies( f, r.model ) )
      throw error( errc::invalid_argument, "internal error: SAT model does not satisfy the formula" );
  }
  return r;
}

} // namespace aigkit
