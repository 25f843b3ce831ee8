/*!
  \file cnf.hpp
  \brief Tseitin encoding of an AIG into CNF.
*/

#pragma once

#include <aigkit/aig.hpp>
#include <aigkit/sat_solver.hpp>

#include <span>
#include <vector>

namespace aigkit
{

struct aig_cnf
{
  cnf_formula formula;
  /*! \brief DIMACS variable of each node id; 0 when the node is not encoded. */
  std::vector<int> node_var;

  /*! \brief DIMACS literal of an AIG literal; the node must be encoded. */
  int lit( literal l ) const
  {
    const auto v = node_var.at( l.node() );
    return l.complemented() ? -v : v;
  }
};

/*! \brief Encodes the transitive fanin of `roots` (all COs when empty).

  One variable per encoded node; the constant node is forced false by a unit
  clause. Each And node n = a & b contributes (¬n ∨ a), (¬n ∨ b), (n ∨ ¬a ∨ ¬b).
*/
aig_cnf tseitin( const aig& g, std::span<const literal> roots = {} );

} // namespace aigkit
