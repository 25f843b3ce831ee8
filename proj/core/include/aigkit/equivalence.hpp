/*!
  \file equivalence.hpp
  \brief Miters, combinational equivalence checking, and bounded sequential equivalence.
*/

#pragma once

#include <aigkit/aig.hpp>
#include <aigkit/sat_solver.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace aigkit
{

/*! \brief How the ports of two networks were paired. */
struct port_pairing
{
  bool by_name{ false };
  /*! \brief b's PI index for each PI of a. */
  std::vector<std::size_t> pi_map;
  /*! \brief b's PO index for each PO of a. */
  std::vector<std::size_t> po_map;
};

/*! \brief Pairs PIs and POs: by name when both sides are fully named, positionally otherwise.

  A partially named (or duplicate-named) port list on either side is an
  errc::interface_mismatch, as is a name without a counterpart. Latches are
  paired positionally.
*/
port_pairing pair_ports( const aig& a, const aig& b );

struct miter
{
  /*! \brief CIs are a's PIs (then paired latch outputs); a single PO = OR of all output XORs. */
  aig network;
  port_pairing pairing;
  /*! \brief XOR literal of each compared output pair (POs, then latch next-states). */
  std::vector<literal> differences;
};

miter build_miter( const aig& a, const aig& b );

enum class cec_verdict
{
  equivalent,
  not_equivalent,
  unknown
};

const char* to_string( cec_verdict v );

struct cec_params
{
  std::uint32_t exhaustive_threshold{ 16 };
  std::uint32_t random_words{ 64 };
  std::uint64_t seed{ 0x5eed };
  /*! \brief Limits for each per-output SAT call. */
  sat_limits limits{ 2'000'000, 0.0 };
  /*! \brief Force the SAT path even for small inputs (used to cross-check the two engines). */
  bool force_sat{ false };
};

struct cec_result
{
  cec_verdict verdict{ cec_verdict::unknown };
  /*! \brief Input assignment in a's CI order (PIs, then latch outputs) that exposes a difference. */
  std::vector<bool> counterexample;
  /*! \brief Index into miter::differences of the failing output. */
  std::optional<std::size_t> failing_output;
  std::string method;
};

/*! \brief Combinational equivalence; latches are treated as paired free inputs and outputs.

  Every not_equivalent counterexample is re-simulated on both networks before returning.
*/
cec_result cec( const aig& a, const aig& b, const cec_params& ps = {} );

/*! \brief DIMACS of the miter asserting that some output pair differs. */
cnf_formula miter_cnf( const aig& a, const aig& b );

/*! \brief Evaluates every CO of `g` under one CI assignment. */
std::vector<bool> evaluate( const aig& g, const std::vector<bool>& ci_values );

struct seq_trace
{
  /*! \brief Input values per step, in a's PI order. */
  std::vector<std::vector<bool>> inputs;
  std::size_t failing_step{ 0 };
  std::size_t failing_output{ 0 };
};

struct seq_equiv_result
{
  bool equivalent{ false };
  /*! \brief Depth checked when equivalent. */
  std::uint32_t depth{ 0 };
  std::optional<seq_trace> trace;
  /*! \brief True when the exhaustive reachable-state sweep ran. */
  bool exhaustive{ false };
};

struct seq_equiv_params
{
  std::uint32_t depth{ 16 };
  std::uint32_t vectors{ 1000 };
  std::uint64_t seed{ 0x5eed };
  std::uint32_t exhaustive_max_latches{ 10 };
  std::uint32_t exhaustive_max_pis{ 10 };
};

/*! \brief Compares PO streams of two sequential networks from their initial states, up to `depth` steps.

  Drives `vectors` random input sequences; when both networks have at most 10
  latches and PIs, additionally explores every input at every reachable product
  state breadth-first up to `depth` steps. Uninitialized latches start at 0.
*/
seq_equiv_result bounded_seq_equiv( const aig& a, const aig& b, const seq_equiv_params& ps = {} );

/*! \brief Replays a trace on both networks; true if the PO streams differ at the recorded step. */
bool trace_distinguishes( const aig& a, const aig& b, const seq_trace& t );

} // namespace aigkit
