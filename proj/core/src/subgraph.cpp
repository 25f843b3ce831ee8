#include <aigkit/subgraph.hpp>

#include <algorithm>
#include <sstream>

namespace aigkit
{

truth_table subgraph::simulate() const
{
  std::vector<truth_table> values;
  values.reserve( 1 + num_leaves + ands.size() );
  values.push_back( truth_table::constant( num_leaves, false ) );
  for ( std::uint32_t i = 0; i < num_leaves; ++i )
    values.push_back( truth_table::nth_var( num_leaves, i ) );
  auto value_of = [&]( std::uint32_t lit ) {
    return ( lit & 1u ) ? ~values[lit >> 1] : values[lit >> 1];
  };
  for ( const auto& a : ands )
    values.push_back( value_of( a[0] ) & value_of( a[1] ) );
  return value_of( root );
}

std::uint32_t subgraph::depth() const
{
  std::vector<std::uint32_t> lvl( 1 + num_leaves + ands.size(), 0 );
  for ( std::size_t i = 0; i < ands.size(); ++i )
    lvl[1 + num_leaves + i] = 1 + std::max( lvl[ands[i][0] >> 1], lvl[ands[i][1] >> 1] );
  return lvl[root >> 1];
}

subgraph subgraph::remap_leaves( std::span<const std::uint8_t> perm, std::uint32_t neg_mask, bool out_neg ) const
{
  auto map_lit = [&]( std::uint32_t lit ) {
    const auto idx = lit >> 1;
    if ( idx == 0 || idx > num_leaves )
      return lit;
    const auto i = idx - 1;
    const auto target = make_lit( perm[i] + 1u, ( ( neg_mask >> i ) & 1u ) != 0 );
    return target ^ ( lit & 1u );
  };
  subgraph out = *this;
  for ( auto& a : out.ands )
  {
    a[0] = map_lit( a[0] );
    a[1] = map_lit( a[1] );
  }
  out.root = map_lit( root ) ^ ( out_neg ? 1u : 0u );
  return out;
}

std::string subgraph::to_string() const
{
  std::ostringstream os;
  os << num_leaves << ':';
  for ( const auto& a : ands )
    os << a[0] << ',' << a[1] << ';';
  os << root;
  return os.str();
}

subgraph_builder::subgraph_builder( std::uint32_t num_leaves ) : num_leaves_( num_leaves ) {}

std::uint32_t subgraph_builder::make_and( std::uint32_t a, std::uint32_t b )
{
  if ( a > b )
    std::swap( a, b );
  if ( a == 0 )
    return 0;
  if ( a == 1 )
    return b;
  if ( a == b )
    return a;
  if ( ( a ^ 1u ) == b )
    return 0;
  const auto key = ( static_cast<std::uint64_t>( a ) << 32 ) | b;
  if ( auto it = hash_.find( key ); it != hash_.end() )
    return it->second;
  ands_.push_back( { a, b } );
  const auto lit = subgraph::make_lit( num_leaves_ + static_cast<std::uint32_t>( ands_.size() ), false );
  hash_.emplace( key, lit );
  return lit;
}

subgraph subgraph_builder::finish( std::uint32_t root ) const
{
  const auto first_and = num_leaves_ + 1;
  std::vector<char> used( ands_.size(), 0 );
  std::vector<std::uint32_t> stack{ root >> 1 };
  while ( !stack.empty() )
  {
    const auto idx = stack.back();
    stack.pop_back();
    if ( idx < first_and || used[idx - first_and] )
      continue;
    used[idx - first_and] = 1;
    stack.push_back( ands_[idx - first_and][0] >> 1 );
    stack.push_back( ands_[idx - first_and][1] >> 1 );
  }
  std::vector<std::uint32_t> new_index( ands_.size(), 0 );
  subgraph out;
  out.num_leaves = num_leaves_;
  auto map_lit = [&]( std::uint32_t lit ) {
    const auto idx = lit >> 1;
    if ( idx < first_and )
      return lit;
    return subgraph::make_lit( new_index[idx - first_and], false ) ^ ( lit & 1u );
  };
  for ( std::size_t i = 0; i < ands_.size(); ++i )
  {
    if ( !used[i] )
      continue;
    out.ands.push_back( { map_lit( ands_[i][0] ), map_lit( ands_[i][1] ) } );
    new_index[i] = first_and + static_cast<std::uint32_t>( out.ands.size() ) - 1;
  }
  out.root = map_lit( root );
  return out;
}

placement_estimate estimate_placement( const aig& g, const subgraph& s, std::span<const literal> leaves,
                                       const std::unordered_set<node_id>& freed, node_id forbidden,
                                       std::uint32_t max_added )
{
  placement_estimate est;
  // known literal or nullopt (a node that would be new)
  std::vector<std::optional<literal>> lits( 1 + s.num_leaves + s.ands.size() );
  std::vector<std::uint32_t> levels( lits.size(), 0 );
  lits[0] = const_false;
  for ( std::uint32_t i = 0; i < s.num_leaves; ++i )
  {
    lits[1 + i] = leaves[i];
    levels[1 + i] = g.level( leaves[i].node() );
  }
  for ( std::size_t i = 0; i < s.ands.size(); ++i )
  {
    const auto idx = 1 + s.num_leaves + i;
    const auto& a = s.ands[i];
    const auto& l0 = lits[a[0] >> 1];
    const auto& l1 = lits[a[1] >> 1];
    levels[idx] = 1 + std::max( levels[a[0] >> 1], levels[a[1] >> 1] );
    if ( l0 && l1 )
    {
      const auto x = *l0 ^ ( ( a[0] & 1u ) != 0 );
      const auto y = *l1 ^ ( ( a[1] & 1u ) != 0 );
      if ( auto found = g.find_and( x, y ) )
      {
        if ( found->node() == forbidden )
        {
          est.valid = false;
          return est;
        }
        lits[idx] = *found;
        levels[idx] = g.level( found->node() );
        if ( g.is_and( found->node() ) && freed.count( found->node() ) )
          ++est.added;
      }
      else
      {
        ++est.added;
      }
    }
    else
    {
      ++est.added;
    }
    if ( est.added > max_added )
    {
      est.valid = false;
      return est;
    }
  }
  const auto ridx = s.root >> 1;
  est.root_level = levels[ridx];
  if ( lits[ridx] )
    est.existing_root = *lits[ridx] ^ ( ( s.root & 1u ) != 0 );
  return est;
}

literal instantiate( aig& g, const subgraph& s, std::span<const literal> leaves )
{
  std::vector<literal> lits;
  lits.reserve( 1 + s.num_leaves + s.ands.size() );
  lits.push_back( const_false );
  for ( std::uint32_t i = 0; i < s.num_leaves; ++i )
    lits.push_back( leaves[i] );
  auto lit_of = [&]( std::uint32_t r ) { return lits[r >> 1] ^ ( ( r & 1u ) != 0 ); };
  for ( const auto& a : s.ands )
    lits.push_back( g.create_and( lit_of( a[0] ), lit_of( a[1] ) ) );
  return lit_of( s.root );
}

} // namespace aigkit
