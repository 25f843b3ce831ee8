/*
  Command shell behind the `aigkit` executable: session state, command
  dispatch, chaining and script execution.
*/

#pragma once

#include <aigkit/aig.hpp>
#include <aigkit/cell_library.hpp>
#include <aigkit/mapped_netlist.hpp>

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace aigkit::shell
{

/* Raised for unknown commands and malformed flags (exit code 2). */
class usage_error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

enum exit_code : int
{
  success = 0,
  command_failed = 1,
  usage_failed = 2
};

class session
{
public:
  session( std::ostream& out, std::ostream& err );

  /* Runs one line of `;`-separated commands. Stops at the first failure. */
  int execute_line( const std::string& line );

  /* Runs a script; `#` starts a comment. Diagnostics cite the line number. */
  int run_script( std::istream& in, const std::string& origin );

  /* Interactive loop with a numbered prompt. */
  int repl( std::istream& in, bool show_prompt );

  bool quit_requested() const { return quit_; }
  std::size_t counter() const { return counter_; }
  const std::optional<aig>& network() const { return network_; }

  /* Splits on `;` outside quotes. */
  static std::vector<std::string> split_commands( const std::string& line );
  /* Whitespace tokenization honouring double quotes. */
  static std::vector<std::string> tokenize( const std::string& command );

private:
  void dispatch( const std::vector<std::string>& tokens );
  aig read_network_file( const std::filesystem::path& path, std::optional<mapped_netlist>* mapped );
  aig& require_aig( const char* command );

  void cmd_read( const std::vector<std::string>& args );
  void cmd_read_lib( const std::vector<std::string>& args );
  void cmd_strash( const std::vector<std::string>& args );
  void cmd_print_stats( const std::vector<std::string>& args );
  void cmd_aigaug( const std::vector<std::string>& args );
  void cmd_write_edgelist( const std::vector<std::string>& args );
  void cmd_write( const std::vector<std::string>& args );
  void cmd_write_features( const std::vector<std::string>& args );
  void cmd_cec( const std::vector<std::string>& args );
  void cmd_sample( const std::vector<std::string>& args );
  void cmd_retime_aug( const std::vector<std::string>& args );
  void cmd_lutmap( const std::vector<std::string>& args );
  void cmd_help( const std::vector<std::string>& args );
  void cmd_quit( const std::vector<std::string>& args );

  std::ostream& out_;
  std::ostream& err_;
  std::optional<aig> network_;
  /* set while the current network is a mapped netlist that has not been strashed */
  std::optional<mapped_netlist> mapped_;
  std::optional<cell_library> library_;
  /* "<script>:<line>: " while a script runs */
  std::string diag_prefix_;
  std::size_t counter_{ 1 };
  bool quit_{ false };
};

} // namespace aigkit::shell
