/*!
  \file sat_solver.hpp
  \brief CNF formulas and a conflict-driven clause-learning SAT solver.

  Literals follow the DIMACS convention: variable v (1-based) is `v`, its
  negation is `-v`.
*/

#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace aigkit
{

struct cnf_formula
{
  std::uint32_t num_vars{ 0 };
  std::vector<std::vector<int>> clauses;

  std::uint32_t new_var() { return ++num_vars; }
  void add_clause( std::vector<int> clause ) { clauses.push_back( std::move( clause ) ); }

  /*! \brief DIMACS text with a `p cnf V C` header. */
  std::string to_dimacs() const;
};

/*! \brief Parses DIMACS CNF text (comment lines start with 'c'). */
cnf_formula read_dimacs( std::string_view text );

/*! \brief Resource limits; zero means unlimited. */
struct sat_limits
{
  std::uint64_t max_conflicts{ 0 };
  double max_seconds{ 0.0 };
};

enum class sat_status
{
  sat,
  unsat,
  unknown
};

struct sat_result
{
  sat_status status{ sat_status::unknown };
  /*! \brief model[v] for v in 1..num_vars (index 0 unused); only filled when sat. */
  std::vector<bool> model;
  std::uint64_t conflicts{ 0 };
  std::uint64_t decisions{ 0 };
  std::uint64_t propagations{ 0 };
};

/*! \brief Incremental CDCL solver: watched literals, first-UIP learning, VSIDS, Luby restarts.

  Clauses may be added between calls to solve(); learnt clauses are kept.
*/
class sat_solver
{
public:
  sat_solver();
  ~sat_solver();
  sat_solver( const sat_solver& ) = delete;
  sat_solver& operator=( const sat_solver& ) = delete;

  std::uint32_t new_var();
  std::uint32_t num_vars() const;
  /*! \brief Returns false once the clause database is unsatisfiable at level 0. */
  bool add_clause( std::span<const int> clause );
  bool add_clause( std::initializer_list<int> clause ) { return add_clause( std::span<const int>( clause.begin(), clause.size() ) ); }

  /*! \brief Solves under assumptions; limits apply to this call only. */
  sat_result solve( std::span<const int> assumptions = {}, const sat_limits& limits = {} );

private:
  struct impl;
  std::unique_ptr<impl> impl_;
};

/*! \brief One-shot solve of a formula; a sat model is checked against every clause before returning. */
sat_result sat_solve( const cnf_formula& f, const sat_limits& limits = {} );

/*! \brief True if `model` (1-based) satisfies every clause of `f`. */
bool satisfies( const cnf_formula& f, const std::vector<bool>& model );

} // namespace aigkit
