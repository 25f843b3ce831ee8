#include <aigkit/isop.hpp>
#include <aigkit/rewrite_library.hpp>

#include <algorithm>
#include <chrono>
#include <optional>
#include <set>
#include <string>

namespace aigkit
{

namespace
{

constexpr std::uint32_t max_volume = 15;

struct forest_entry
{
  std::uint16_t function{ 0 };
  std::uint32_t fanin0{ 0 };  // 2*entry + complement
  std::uint32_t fanin1{ 0 };
  std::uint8_t volume{ 0 };
  std::array<std::uint32_t, max_volume> cone{};  // And entries in the transitive fanin, sorted
};

/* size of the union of two sorted cones plus one (the new node); 0 when above budget */
std::uint32_t merged_volume( const forest_entry& a, const forest_entry& b, std::uint32_t budget,
                             std::array<std::uint32_t, max_volume>& out )
{
  std::uint32_t i = 0, j = 0, k = 0;
  while ( i < a.volume || j < b.volume )
  {
    if ( k >= budget )
      return 0;
    if ( j == b.volume || ( i < a.volume && a.cone[i] < b.cone[j] ) )
      out[k++] = a.cone[i++];
    else if ( i == a.volume || b.cone[j] < a.cone[i] )
      out[k++] = b.cone[j++];
    else
    {
      out[k++] = a.cone[i++];
      ++j;
    }
  }
  return k + 1 <= budget ? k + 1 : 0;
}

/* recipe over four leaves computing the function of forest entry `root` */
subgraph to_subgraph( const std::vector<forest_entry>& forest, std::uint32_t root_lit )
{
  subgraph_builder b( 4 );
  std::vector<std::uint32_t> lit_of( forest.size(), 0 );
  lit_of[0] = subgraph_builder::constant( false );
  for ( std::uint32_t v = 0; v < 4; ++v )
    lit_of[1 + v] = b.leaf( v );
  const auto& r = forest[root_lit >> 1];
  if ( ( root_lit >> 1 ) > 4 )
  {
    for ( std::uint32_t k = 0; k < r.volume; ++k )
    {
      const auto e = r.cone[k];
      const auto& n = forest[e];
      lit_of[e] = b.make_and( lit_of[n.fanin0 >> 1] ^ ( n.fanin0 & 1u ), lit_of[n.fanin1 >> 1] ^ ( n.fanin1 & 1u ) );
    }
  }
  return b.finish( lit_of[root_lit >> 1] ^ ( root_lit & 1u ) );
}

/* instantiates a recipe computing `function` from the smallest structure of its class */
std::uint32_t place_structure( subgraph_builder& b, const std::vector<std::vector<subgraph>>& classes,
                               std::uint16_t function )
{
  const auto& entry = npn4_table::instance()[function];
  const auto& s = classes[entry.class_index].front();
  const auto& t = entry.transform;
  std::vector<std::uint32_t> lits( 1 + s.num_leaves + s.ands.size() );
  lits[0] = subgraph_builder::constant( false );
  for ( std::uint32_t i = 0; i < 4; ++i )
    lits[1 + i] = b.leaf( t.perm[i] ) ^ ( ( t.input_neg >> i ) & 1u );
  auto lit_of = [&]( std::uint32_t r ) { return lits[r >> 1] ^ ( r & 1u ); };
  for ( std::size_t k = 0; k < s.ands.size(); ++k )
    lits[5 + k] = b.make_and( lit_of( s.ands[k][0] ), lit_of( s.ands[k][1] ) );
  return lit_of( s.root ) ^ ( t.output_neg ? 1u : 0u );
}

/* best single Shannon (or XOR) split on one variable, cofactors taken from enumerated classes */
std::optional<subgraph> shannon_structure( const std::vector<std::vector<subgraph>>& classes, std::uint16_t function )
{
  const auto& npn = npn4_table::instance();
  std::optional<subgraph> best;
  const auto f = truth_table::from_uint64( 4, function );
  for ( std::uint32_t v = 0; v < 4; ++v )
  {
    const auto f0 = static_cast<std::uint16_t>( f.cofactor0( v ).to_uint64() );
    const auto f1 = static_cast<std::uint16_t>( f.cofactor1( v ).to_uint64() );
    if ( classes[npn[f0].class_index].empty() || classes[npn[f1].class_index].empty() )
      continue;
    subgraph_builder b( 4 );
    const auto x = b.leaf( v );
    const auto l0 = place_structure( b, classes, f0 );
    const auto l1 = place_structure( b, classes, f1 );
    const auto root = b.make_or( b.make_and( x, l1 ), b.make_and( x ^ 1u, l0 ) );
    auto s = b.finish( root );
    if ( !best || s.size() < best->size() || ( s.size() == best->size() && s.depth() < best->depth() ) )
      best = std::move( s );
  }
  return best;
}

} // namespace

rewrite_library::rewrite_library( rewrite_library_params ps )
{
  const auto start = std::chrono::steady_clock::now();
  const auto& npn = npn4_table::instance();
  const auto num_classes = npn.num_classes();
  keys_ = npn.representatives();
  classes_.resize( num_classes );

  const auto budget = std::min( ps.node_budget, max_volume );
  std::vector<std::uint8_t> best_fn( 1u << 16, 0xFF );
  std::vector<std::uint8_t> best_class( num_classes, 0xFF );

  std::vector<forest_entry> forest( 5 );
  forest[0].function = 0;
  for ( std::uint32_t v = 0; v < 4; ++v )
    forest[1 + v].function = static_cast<std::uint16_t>( var_masks[v] & 0xFFFF );
  for ( const auto& e : forest )
  {
    best_fn[e.function] = 0;
    best_fn[static_cast<std::uint16_t>( ~e.function )] = 0;
    best_class[npn[e.function].class_index] = 0;
  }

  std::array<std::uint32_t, max_volume> merged{};
  for ( std::uint32_t i = 1; i < forest.size(); ++i )
  {
    for ( std::uint32_t j = 1; j < i; ++j )
    {
      if ( static_cast<std::uint32_t>( forest[i].volume + forest[j].volume + 1 ) > 2 * budget )
        continue;
      const auto vol = merged_volume( forest[i], forest[j], budget, merged );
      if ( vol == 0 )
        continue;
      for ( std::uint32_t c = 0; c < 4; ++c )
      {
        const std::uint16_t fi = ( c & 1u ) ? static_cast<std::uint16_t>( ~forest[i].function ) : forest[i].function;
        const std::uint16_t fj = ( c & 2u ) ? static_cast<std::uint16_t>( ~forest[j].function ) : forest[j].function;
        const auto f = static_cast<std::uint16_t>( fi & fj );
        if ( vol >= best_fn[f] )
          continue;
        const auto cls = npn[f].class_index;
        if ( vol > best_class[cls] )
          continue;
        forest_entry e;
        e.function = f;
        e.fanin0 = ( i << 1 ) | ( c & 1u );
        e.fanin1 = ( j << 1 ) | ( ( c >> 1 ) & 1u );
        e.volume = static_cast<std::uint8_t>( vol );
        const auto id = static_cast<std::uint32_t>( forest.size() );
        std::copy_n( merged.begin(), vol - 1, e.cone.begin() );
        e.cone[vol - 1] = id;  // ids grow, so the cone stays sorted
        forest.push_back( e );
        best_fn[f] = static_cast<std::uint8_t>( vol );
        best_fn[static_cast<std::uint16_t>( ~f )] = static_cast<std::uint8_t>( vol );
        best_class[cls] = std::min<std::uint8_t>( best_class[cls], static_cast<std::uint8_t>( vol ) );
      }
    }
  }
  stats_.forest_size = forest.size();

  // collect minimum-volume structures per class, re-expressed over the canonical function
  std::vector<std::set<std::string>> seen( num_classes );
  auto add_structure = [&]( std::size_t cls, const subgraph& s ) {
    if ( classes_[cls].size() >= ps.max_structures )
      return;
    if ( seen[cls].insert( s.to_string() ).second )
      classes_[cls].push_back( s );
  };
  for ( std::uint32_t e = 0; e < forest.size(); ++e )
  {
    for ( const bool neg : { false, true } )
    {
      const auto f = static_cast<std::uint16_t>( neg ? ~forest[e].function : forest[e].function );
      const auto& entry = npn[f];
      if ( forest[e].volume != best_class[entry.class_index] )
        continue;
      // f = apply(canonical, t)  =>  canonical = apply(f, inverse(t))
      const auto inv = inverse( entry.transform, 4 );
      const auto s = to_subgraph( forest, ( e << 1 ) | ( neg ? 1u : 0u ) )
                         .remap_leaves( inv.perm, inv.input_neg, inv.output_neg );
      add_structure( entry.class_index, s );
    }
  }
  for ( std::size_t cls = 0; cls < num_classes; ++cls )
  {
    if ( !classes_[cls].empty() )
    {
      ++stats_.classes_from_enumeration;
      continue;
    }
  }
  // classes beyond the budget: smaller of a factored form and a Shannon split (computed before adding any)
  std::vector<std::pair<std::size_t, subgraph>> fallback;
  for ( std::size_t cls = 0; cls < num_classes; ++cls )
  {
    if ( !classes_[cls].empty() )
      continue;
    ++stats_.classes_from_factoring;
    auto s = factor_function( truth_table::from_uint64( 4, keys_[cls] ) );
    if ( auto sh = shannon_structure( classes_, keys_[cls] ); sh && sh->size() < s.size() )
      s = std::move( *sh );
    fallback.emplace_back( cls, std::move( s ) );
  }
  for ( auto& [cls, s] : fallback )
    add_structure( cls, s );
  stats_.build_seconds = std::chrono::duration<double>( std::chrono::steady_clock::now() - start ).count();
}

const rewrite_library& rewrite_library::instance()
{
  static const rewrite_library lib;
  return lib;
}

std::span<const subgraph> rewrite_library::structures( std::uint16_t canonical ) const
{
  const auto& entry = npn4_table::instance()[canonical];
  return classes_[entry.class_index];
}

std::vector<std::uint16_t> rewrite_library::keys() const
{
  return keys_;
}

} // namespace aigkit
