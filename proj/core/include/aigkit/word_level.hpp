/*!
  \file word_level.hpp
  \brief A tiny word-level Verilog front-end: unsigned buses and arithmetic assign statements.

  Every operator is evaluated modulo 2^W, where W is the width of the output bus the
  expression is assigned to. A `*` of an m-bit and an n-bit operand therefore yields
  the low W bits of the full (m+n)-bit product. An operand wider than the target bus
  is rejected with errc::width_mismatch rather than silently truncated.
*/

#pragma once

#include <aigkit/aig.hpp>

#include <cstdint>
#include <filesystem>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace aigkit
{

struct word_expr
{
  enum class op
  {
    bus,       //!< whole input bus (`name`)
    bit,       //!< single bit `name[index]`
    constant,  //!< unsigned literal (`value`, `width`)
    not_,
    and_,
    or_,
    xor_,
    add,
    sub,
    mul
  };
  op kind{ op::constant };
  std::string name;
  std::uint32_t index{ 0 };
  std::uint64_t value{ 0 };
  std::uint32_t width{ 0 };
  std::vector<word_expr> operands;
};

struct word_bus
{
  std::string name;
  std::uint32_t width{ 1 };
};

struct word_assignment
{
  std::string target;
  word_expr expr;
};

struct word_level_module
{
  std::string name;
  std::vector<word_bus> inputs;
  std::vector<word_bus> outputs;
  std::vector<word_assignment> assignments;
};

/*! \brief Parses `module ...; input [m:0] a; output [w:0] z; assign z = expr; endmodule`.

  Supported operators: `~ * + - & ^ |` and parentheses. Other operators raise
  errc::unsupported_operator.
*/
word_level_module read_word_level_verilog( std::string_view text );
word_level_module read_word_level_verilog_file( const std::filesystem::path& path );

/*! \brief Width of an expression before truncation to a target. */
std::uint32_t natural_width( const word_level_module& m, const word_expr& e );

/*! \brief Builds the bit-level network. PIs are a[0..], b[0..] per input bus (LSB first); POs likewise. */
aig bit_blast( const word_level_module& m );

} // namespace aigkit
