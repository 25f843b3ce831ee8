#include <aigkit/errors.hpp>
#include <aigkit/npn.hpp>

#include <algorithm>
#include <numeric>

namespace aigkit
{

namespace
{

std::uint32_t source_index( std::uint32_t x, std::uint32_t num_vars, const npn_transform& t )
{
  std::uint32_t z = 0;
  for ( std::uint32_t i = 0; i < num_vars; ++i )
  {
    const auto bit = ( ( x >> t.perm[i] ) & 1u ) ^ ( ( t.input_neg >> i ) & 1u );
    z |= bit << i;
  }
  return z;
}

/* every (perm, input_neg) pair over n variables; output negation is handled by the callers */
std::vector<npn_transform> input_transforms( std::uint32_t num_vars )
{
  std::vector<npn_transform> result;
  std::array<std::uint8_t, 4> perm{ 0, 1, 2, 3 };
  do
  {
    for ( std::uint32_t neg = 0; neg < ( 1u << num_vars ); ++neg )
    {
      npn_transform t;
      t.perm = perm;
      t.input_neg = static_cast<std::uint8_t>( neg );
      result.push_back( t );
    }
  } while ( std::next_permutation( perm.begin(), perm.begin() + num_vars ) );
  return result;
}

struct transform_index_map
{
  npn_transform transform;
  std::array<std::uint8_t, 16> source{};
};

const std::vector<transform_index_map>& cached_transforms( std::uint32_t num_vars )
{
  static const auto maps = [] {
    std::array<std::vector<transform_index_map>, 5> all;
    for ( std::uint32_t n = 0; n <= 4; ++n )
    {
      for ( const auto& t : input_transforms( n ) )
      {
        transform_index_map m;
        m.transform = t;
        for ( std::uint32_t x = 0; x < ( 1u << n ); ++x )
          m.source[x] = static_cast<std::uint8_t>( source_index( x, n, t ) );
        all[n].push_back( m );
      }
    }
    return all;
  }();
  return maps[num_vars];
}

} // namespace

truth_table apply_npn_transform( const truth_table& tt, const npn_transform& t )
{
  const auto n = tt.num_vars();
  if ( n > 4 )
    throw error( errc::invalid_argument, "NPN transforms support at most 4 variables" );
  truth_table out( n );
  for ( std::uint32_t x = 0; x < ( 1u << n ); ++x )
    out.set_bit( x, tt.get_bit( source_index( x, n, t ) ) != t.output_neg );
  return out;
}

npn_transform inverse( const npn_transform& t, std::uint32_t num_vars )
{
  npn_transform inv;
  inv.output_neg = t.output_neg;
  for ( std::uint32_t i = 0; i < num_vars; ++i )
    inv.perm[t.perm[i]] = static_cast<std::uint8_t>( i );
  inv.input_neg = 0;
  for ( std::uint32_t j = 0; j < num_vars; ++j )
  {
    if ( ( t.input_neg >> inv.perm[j] ) & 1u )
      inv.input_neg |= static_cast<std::uint8_t>( 1u << j );
  }
  return inv;
}

npn_class npn_canonicalize( const truth_table& tt )
{
  const auto n = tt.num_vars();
  if ( n > 4 )
    throw error( errc::invalid_argument, "npn_canonicalize: at most 4 variables" );
  const auto bits = 1u << n;

  const auto f = static_cast<std::uint32_t>( tt.to_uint64() );
  const std::uint32_t mask = ( 1u << bits ) - 1;
  std::uint32_t best = ~0u;
  npn_transform best_t;
  for ( const auto& m : cached_transforms( n ) )
  {
    std::uint32_t g = 0;
    for ( std::uint32_t x = 0; x < bits; ++x )
      g |= ( ( f >> m.source[x] ) & 1u ) << x;
    for ( const bool neg : { false, true } )
    {
      const auto value = neg ? ( ~g & mask ) : g;
      if ( value < best )
      {
        best = value;
        best_t = m.transform;
        best_t.output_neg = neg;
      }
    }
  }
  npn_class result;
  result.canonical = truth_table::from_uint64( n, best );
  result.transform = inverse( best_t, n );
  return result;
}

std::uint16_t apply_npn4( std::uint16_t tt, const npn_transform& t )
{
  std::uint16_t out = 0;
  for ( std::uint32_t x = 0; x < 16; ++x )
    out |= static_cast<std::uint16_t>( ( ( tt >> source_index( x, 4, t ) ) & 1u ) << x );
  return t.output_neg ? static_cast<std::uint16_t>( ~out ) : out;
}

const npn4_table& npn4_table::instance()
{
  static const npn4_table table;
  return table;
}

npn4_table::npn4_table() : entries_( 1u << 16 )
{
  std::vector<char> done( 1u << 16, 0 );
  const auto transforms = input_transforms( 4 );
  // first unvisited function in ascending order is the minimum of its orbit
  for ( std::uint32_t f = 0; f < ( 1u << 16 ); ++f )
  {
    if ( done[f] )
      continue;
    const auto index = static_cast<std::uint16_t>( representatives_.size() );
    representatives_.push_back( static_cast<std::uint16_t>( f ) );
    for ( auto t : transforms )
    {
      for ( const bool neg : { false, true } )
      {
        t.output_neg = neg;
        const auto g = apply_npn4( static_cast<std::uint16_t>( f ), t );
        if ( done[g] )
          continue;
        done[g] = 1;
        entries_[g] = npn4_entry{ static_cast<std::uint16_t>( f ), index, t };
      }
    }
  }
}

} // namespace aigkit
