/*!
  \file aig.hpp
  \brief And-Inverter Graph with structural hashing and in-place node replacement.

  Node 0 is the constant-false node. Primary inputs and latch outputs are
  combinational inputs (CIs); primary outputs and latch next-state literals
  are combinational outputs (COs). Node ids are never reused: removed nodes
  stay in the node vector marked dead.
*/

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace aigkit
{

using node_id = std::uint32_t;

/*! \brief Reference to a node, possibly complemented. */
struct literal
{
  std::uint32_t data{ 0 };

  constexpr literal() = default;
  constexpr literal( node_id node, bool complemented ) : data( ( node << 1 ) | ( complemented ? 1u : 0u ) ) {}

  static constexpr literal from_raw( std::uint32_t raw )
  {
    literal l;
    l.data = raw;
    return l;
  }

  constexpr node_id node() const { return data >> 1; }
  constexpr bool complemented() const { return ( data & 1u ) != 0; }
  constexpr literal regular() const { return from_raw( data & ~1u ); }

  constexpr literal operator!() const { return from_raw( data ^ 1u ); }
  constexpr literal operator^( bool c ) const { return from_raw( data ^ ( c ? 1u : 0u ) ); }

  constexpr auto operator<=>( const literal& ) const = default;
};

inline constexpr literal const_false{ 0, false };
inline constexpr literal const_true{ 0, true };

enum class node_kind : std::uint8_t
{
  constant,
  primary_input,
  and_gate,
  latch
};

struct aig_node
{
  node_kind kind{ node_kind::constant };
  literal fanin0{};
  literal fanin1{};
  bool dead{ false };
  std::uint32_t refs{ 0 };  // fanouts including CO references
  std::uint32_t level{ 0 };
};

struct output_port
{
  literal driver{};
  std::string name;
};

struct latch_info
{
  node_id output{ 0 };
  literal next{};
  std::uint8_t init{ 0 };
  std::string name;
};

class aig
{
public:
  explicit aig( std::string name = {} );

  aig( const aig& ) = default;
  aig( aig&& ) noexcept = default;
  aig& operator=( const aig& ) = default;
  aig& operator=( aig&& ) noexcept = default;

  /* construction */
  literal create_pi( std::string name = {} );
  /*! \brief Adds a latch; its next-state literal starts as constant false. Returns the latch output. */
  literal create_latch( std::uint8_t init = 0, std::string name = {} );
  void set_latch_next( std::size_t latch_index, literal next );
  std::size_t create_po( literal driver, std::string name = {} );
  void set_po_driver( std::size_t po_index, literal driver );

  /*! \brief Structurally hashed AND with constant propagation, idempotence and annihilation. */
  literal create_and( literal a, literal b );
  literal create_or( literal a, literal b ) { return !create_and( !a, !b ); }
  literal create_xor( literal a, literal b );
  literal create_mux( literal sel, literal then_lit, literal else_lit );

  /*! \brief Result of create_and without creating anything; nullopt when a new node would be needed. */
  std::optional<literal> find_and( literal a, literal b ) const;

  /* mutation */

  /*! \brief Redirects every fanout of `old_node` to `with`, then deletes nodes left without fanouts.

    Fanouts whose fanin pair collapses (constant, duplicate, or an existing
    hashed node) are replaced recursively. `with` must not depend on `old_node`.
  */
  void replace( node_id old_node, literal with );

  /*! \brief Live nodes whose fanins were rewired by the most recent replace(). */
  const std::vector<node_id>& last_touched() const { return touched_; }

  /*! \brief Removes And nodes not reachable from any CO. Returns the number removed. */
  std::size_t cleanup();

  /*! \brief Removes latches whose output has no fanout. Returns the number removed. */
  std::size_t remove_unused_latches();

  /*! \brief Deletes `n` and, recursively, fanins left without fanouts; `n` must have no fanouts. */
  std::size_t delete_if_dangling( node_id n );

  /* access */
  const std::string& name() const { return name_; }
  void set_name( std::string name ) { name_ = std::move( name ); }

  std::size_t size() const { return nodes_.size(); }
  const aig_node& node( node_id n ) const { return nodes_[n]; }
  node_kind kind( node_id n ) const { return nodes_[n].kind; }
  bool is_and( node_id n ) const { return nodes_[n].kind == node_kind::and_gate; }
  bool is_ci( node_id n ) const
  {
    return nodes_[n].kind == node_kind::primary_input || nodes_[n].kind == node_kind::latch;
  }
  bool is_constant( node_id n ) const { return n == 0; }
  bool is_dead( node_id n ) const { return nodes_[n].dead; }
  literal fanin0( node_id n ) const { return nodes_[n].fanin0; }
  literal fanin1( node_id n ) const { return nodes_[n].fanin1; }
  std::uint32_t refs( node_id n ) const { return nodes_[n].refs; }
  std::uint32_t level( node_id n ) const { return nodes_[n].level; }
  const std::vector<node_id>& fanouts( node_id n ) const { return fanouts_[n]; }

  const std::vector<node_id>& pis() const { return pis_; }
  const std::vector<output_port>& pos() const { return pos_; }
  const std::vector<latch_info>& latches() const { return latches_; }
  const std::string& pi_name( std::size_t i ) const { return pi_names_[i]; }
  void set_pi_name( std::size_t i, std::string name ) { pi_names_[i] = std::move( name ); }
  void set_po_name( std::size_t i, std::string name ) { pos_[i].name = std::move( name ); }

  std::size_t num_pis() const { return pis_.size(); }
  std::size_t num_pos() const { return pos_.size(); }
  std::size_t num_latches() const { return latches_.size(); }
  std::size_t num_cis() const { return pis_.size() + latches_.size(); }
  std::size_t num_cos() const { return pos_.size() + latches_.size(); }

  /*! \brief CI node at position i: PIs first, then latch outputs. */
  node_id ci_at( std::size_t i ) const
  {
    return i < pis_.size() ? pis_[i] : latches_[i - pis_.size()].output;
  }
  /*! \brief CO literal at position i: POs first, then latch next-state literals. */
  literal co_at( std::size_t i ) const
  {
    return i < pos_.size() ? pos_[i].driver : latches_[i - pos_.size()].next;
  }

  /*! \brief Live And nodes, including ones not reachable from COs. */
  std::uint32_t num_live_ands() const { return live_ands_; }

  /*! \brief Bumped by every structural change; lets callers detect stale analyses. */
  std::uint64_t version() const { return version_; }

  template<class Fn>
  void foreach_and( Fn&& fn ) const
  {
    for ( node_id n = 0; n < nodes_.size(); ++n )
    {
      if ( nodes_[n].kind == node_kind::and_gate && !nodes_[n].dead )
        fn( n );
    }
  }

  /*! \brief Latch index whose output is node n, if any. */
  std::optional<std::size_t> latch_index_of( node_id n ) const;

  /*! \brief Replaces the latch at `index` by a constant/literal and drops it from the latch list. */
  void remove_latch( std::size_t index, literal substitute );

private:
  static std::uint64_t key_of( literal a, literal b )
  {
    return ( static_cast<std::uint64_t>( a.data ) << 32 ) | b.data;
  }
  static std::optional<literal> trivial_and( literal a, literal b );

  node_id add_node( node_kind kind );
  void add_ref( node_id n, node_id fanout );
  void remove_ref( node_id n, node_id fanout );
  void add_co_ref( node_id n );
  void remove_co_ref( node_id n );
  void hash_erase( node_id n );
  void hash_insert( node_id n );
  void kill( node_id n );
  void update_levels( std::vector<node_id> seeds );
  std::uint32_t computed_level( node_id n ) const;

  std::string name_;
  std::vector<aig_node> nodes_;
  std::vector<std::vector<node_id>> fanouts_;
  std::vector<std::uint32_t> co_refs_;
  std::vector<node_id> pis_;
  std::vector<std::string> pi_names_;
  std::vector<output_port> pos_;
  std::vector<latch_info> latches_;
  std::unordered_map<std::uint64_t, node_id> strash_;
  std::uint32_t live_ands_{ 0 };
  std::uint64_t version_{ 0 };
  std::vector<node_id> touched_;
};

/*! \brief Deterministic topological order of live nodes.

  Constant first, then CIs (PIs, then latches), then And nodes in Kahn
  order picking the smallest ready id. Throws errc::cycle_detected.
*/
std::vector<node_id> topo_order( const aig& g );

/*! \brief Level of every node, indexed by node id (dead nodes get 0). */
std::vector<std::uint32_t> compute_levels( const aig& g );

struct network_stats
{
  std::size_t pi_count{ 0 };
  std::size_t po_count{ 0 };
  std::size_t latch_count{ 0 };
  std::size_t and_count{ 0 };
  std::uint32_t level{ 0 };

  auto operator<=>( const network_stats& ) const = default;
};

/*! \brief Counts over nodes reachable from COs. */
network_stats stats( const aig& g );

/*! \brief Number of And nodes reachable from COs. */
std::size_t and_count( const aig& g );

/*! \brief Bit-parallel simulation of all nodes.

  `ci_patterns` holds `num_words` words per CI, CI-major. Returns `num_words`
  words per node id, node-major; dead nodes read as zero.
*/
std::vector<std::uint64_t> simulate_nodes( const aig& g, std::span<const std::uint64_t> ci_patterns,
                                           std::size_t num_words = 1 );

/*! \brief One pattern word per CI in, one word per CO out (POs first, then latch next-states). */
std::vector<std::uint64_t> simulate( const aig& g, std::span<const std::uint64_t> ci_patterns );

/*! \brief Multi-word variant of simulate: CI-major in, CO-major out. */
std::vector<std::uint64_t> simulate_words( const aig& g, std::span<const std::uint64_t> ci_patterns,
                                           std::size_t num_words );

/*! \brief Rebuilds the network node-by-node through create_and in topological order.

  The copy is dense (no dead slots) and its node ids are topologically sorted.
*/
aig rebuild( const aig& g );

} // namespace aigkit
