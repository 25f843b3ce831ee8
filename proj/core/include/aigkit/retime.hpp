/*!
  \file retime.hpp
  \brief Random atomic retiming moves that preserve sequential equivalence.
*/

#pragma once

#include <aigkit/aig.hpp>

#include <cstdint>
#include <vector>

namespace aigkit
{

struct retime_config
{
  std::uint64_t seed{ 0 };
  std::uint32_t max_moves{ 10 };
};

enum class retime_direction : std::uint8_t
{
  forward,
  backward
};

struct retime_move
{
  retime_direction direction{ retime_direction::forward };
  node_id node{ 0 };

  bool operator==( const retime_move& ) const = default;
};

/*! \brief Every move currently feasible, in node order (forward before backward per node).

  Forward: both fanins of an And are distinct latch outputs with equal,
  defined init values; the two latches move past the gate and merge into one
  whose init is the gate evaluated on the old inits.

  Backward: an And feeds only latches (no And fanouts, no POs), each of which
  reads the node's value as 0 at reset (init xor edge complement = 0); those
  latches are replaced by two init-0 latches on the gate's fanins.
*/
std::vector<retime_move> feasible_moves( const aig& g );

/*! \brief Applies one feasible move in place. */
void apply_move( aig& g, const retime_move& move );

/*! \brief Applies up to max_moves moves, each chosen as draw mod (number of feasible moves).

  Stops early when no move is feasible. Throws errc::no_latches on a
  combinational network.
*/
aig retime_augment( const aig& g, const retime_config& cfg );

} // namespace aigkit
