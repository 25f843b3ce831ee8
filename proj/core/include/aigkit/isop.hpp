/*!
  \file isop.hpp
  \brief Irredundant sum-of-products covers and algebraic factoring.
*/

#pragma once

#include <aigkit/subgraph.hpp>
#include <aigkit/truth_table.hpp>

#include <cstdint>
#include <vector>

namespace aigkit
{

/*! \brief Product term: bit i of `pos` (resp. `neg`) selects literal x_i (resp. !x_i). */
struct cube
{
  std::uint32_t pos{ 0 };
  std::uint32_t neg{ 0 };

  std::uint32_t num_literals() const;
  bool contains( const cube& other ) const  // every literal of `other` is in this cube
  {
    return ( other.pos & ~pos ) == 0 && ( other.neg & ~neg ) == 0;
  }
  bool operator==( const cube& ) const = default;
  auto operator<=>( const cube& ) const = default;
};

using sop = std::vector<cube>;

std::uint32_t literal_count( const sop& cover );

/*! \brief Minato-Morreale ISOP of an incompletely specified function lower <= f <= upper. */
sop isop( const truth_table& lower, const truth_table& upper );
/*! \brief ISOP of a completely specified function. */
sop isop( const truth_table& function );

/*! \brief Evaluates a cover back into a truth table over `num_vars` variables. */
truth_table sop_to_truth_table( const sop& cover, std::uint32_t num_vars );

/*! \brief Algebraic factoring of a cover into a recipe over `num_vars` leaves. */
subgraph factor( const sop& cover, std::uint32_t num_vars );

/*! \brief Smaller of the factored forms of f and !f (the latter with an inverted root). */
subgraph factor_function( const truth_table& function );

} // namespace aigkit
