/*!
  \file cell_library.hpp
  \brief Minimal standard-cell library: one line per cell with pins and a Boolean function.

  Format, one cell per line, '#' starts a comment line:

      cell NAND2 inputs A B output Y function (NOT (AND A B))

  Functions are prefix expressions over the input pins using AND, OR, XOR
  (two or more operands), NOT (one operand), and the constants 0 and 1.
  A cell listing several output pins is kept as a multi-output cell; its
  function is not interpreted and netlists instantiating it are rejected.
*/

#pragma once

#include <aigkit/aig.hpp>
#include <aigkit/truth_table.hpp>

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace aigkit
{

/*! \brief Boolean expression tree over cell input pins. */
struct cell_expr
{
  enum class op : std::uint8_t
  {
    constant,
    pin,
    not_,
    and_,
    or_,
    xor_
  };
  op kind{ op::constant };
  std::uint32_t index{ 0 };  // pin index, or constant value
  std::vector<cell_expr> operands;
};

struct cell
{
  std::string name;
  std::vector<std::string> inputs;
  std::vector<std::string> outputs;
  std::string function_text;
  cell_expr function;

  bool is_multi_output() const { return outputs.size() > 1; }
  const std::string& output() const { return outputs.front(); }
  /*! \brief Function as a truth table over the input pins (pin i = variable i). */
  truth_table truth() const;
  /*! \brief Strashes the function over the given pin literals. */
  literal build( aig& g, std::span<const literal> pins ) const;
};

class cell_library
{
public:
  const cell* find( std::string_view name ) const;
  const std::vector<cell>& cells() const { return cells_; }
  std::size_t size() const { return cells_.size(); }
  std::size_t num_multi_output() const;
  void add( cell c );

private:
  std::vector<cell> cells_;
  std::map<std::string, std::size_t, std::less<>> index_;
};

/*! \brief Parses the library text; throws parse_error or errc::duplicate_cell. */
cell_library read_cell_library( std::string_view text );
cell_library read_cell_library_file( const std::filesystem::path& path );

} // namespace aigkit
