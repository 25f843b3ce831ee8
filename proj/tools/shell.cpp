#include "shell.hpp"

#include <aigkit/aiger.hpp>
#include <aigkit/augment.hpp>
#include <aigkit/batch.hpp>
#include <aigkit/blif.hpp>
#include <aigkit/edgelist.hpp>
#include <aigkit/equivalence.hpp>
#include <aigkit/errors.hpp>
#include <aigkit/lut_map.hpp>
#include <aigkit/retime.hpp>
#include <aigkit/word_level.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <array>
#include <cstdio>
#include <iostream>
#include <map>
#include <sstream>

namespace aigkit::shell
{

namespace
{

struct command_help
{
  const char* name;
  const char* usage;
  const char* summary;
  std::vector<std::pair<const char*, const char*>> options;
};

const std::vector<command_help>& help_table()
{
  static const std::vector<command_help> table{
      { "read", "read <file>", "reads a network; the format follows the extension (.aag, .aig, .blif, .v)",
        { { "file", "AIGER, BLIF, cell-level Verilog (needs read_lib) or word-level Verilog (bit-blasted)" } } },
      { "read_lib", "read_lib <file>", "reads a cell library used by cell-level Verilog",
        { { "file", "library file, one `cell` line per cell" } } },
      { "strash", "strash", "converts the current network into a structurally hashed AIG", {} },
      { "print_stats", "print_stats", "prints inputs/outputs, latches, And nodes and levels", {} },
      { "aigaug", "aigaug [-s <seed>] [-d <file>] [-z] [-Z]",
        "randomly applies rewrite, refactor or resubstitution at every node",
        { { "-s", "random seed (default 0)" },
          { "-d", "file recording the available and selected transform at each node" },
          { "-z", "toggle zero-cost rewriting (default off)" },
          { "-Z", "toggle zero-cost refactoring (default off)" } } },
      { "write_edgelist", "write_edgelist [-N] <file>", "writes the network into an edgelist file",
        { { "-N", "toggle keeping original naming of the netlist in the edgelist (default off)" },
          { "file", "the name of the file to write (extension .el)" } } },
      { "write_features", "write_features <file>", "writes per-node features (.features.csv) matching write_edgelist ids",
        { { "file", "CSV with node_id,f1,f2 (AIG) or a one-hot over cell names (cell-level netlist)" } } },
      { "write", "write <file>", "writes the current AIG (.aag ASCII AIGER, .aig binary AIGER, .blif)",
        { { "file", "output file" } } },
      { "cec", "cec [--dump-cnf <path>] <file1> <file2>", "checks combinational equivalence of two networks",
        { { "--dump-cnf", "also write the miter as DIMACS CNF" }, { "file1 file2", "networks to compare" } } },
      { "sample", "sample -n <count> [-s <seed>] -o <dir> [-k <lut>] [-j <threads>]",
        "writes verified augmented samples, labels.csv and manifest.json",
        { { "-n", "number of samples" },
          { "-s", "base seed; sample i uses seed+i (default 0)" },
          { "-o", "output directory" },
          { "-k", "LUT size for the labels (default 4)" },
          { "-j", "worker threads, 0 = all cores (default 1)" } } },
      { "retime_aug", "retime_aug [-s <seed>] [-m <moves>]", "applies random retiming moves to a sequential AIG",
        { { "-s", "random seed (default 0)" }, { "-m", "maximum number of moves (default 10)" } } },
      { "lutmap", "lutmap [-k <size>]", "reports the depth-optimal k-LUT count and depth",
        { { "-k", "LUT size, 2..6 (default 4)" } } },
      { "help", "help [command]", "lists commands or prints a command's usage", {} },
      { "quit", "quit", "leaves the shell", {} },
  };
  return table;
}

const command_help* find_help( const std::string& name )
{
  for ( const auto& h : help_table() )
  {
    if ( name == h.name )
      return &h;
  }
  return nullptr;
}

std::string usage_text( const command_help& h )
{
  std::ostringstream os;
  os << "usage: " << h.usage << "\n";
  os << "    " << h.summary << "\n";
  for ( const auto& [flag, text] : h.options )
  {
    std::string f = flag;
    f.resize( std::max<std::size_t>( f.size(), 12 ), ' ' );
    os << "    " << f << ": " << text << "\n";
  }
  os << "    -h          : print the command usage\n";
  return os.str();
}

/* thrown after a command printed its usage */
struct help_shown
{
};

void parse( CLI::App& app, const std::string& name, const std::vector<std::string>& args )
{
  app.set_help_flag( "-h,--help" );
  app.allow_windows_style_options( false );
  std::vector<std::string> reversed( args.rbegin(), args.rend() );
  try
  {
    app.parse( reversed );
  }
  catch ( const CLI::CallForHelp& )
  {
    throw help_shown{};
  }
  catch ( const CLI::ParseError& e )
  {
    throw usage_error( name + ": " + e.what() + " (see '" + name + " -h')" );
  }
}

std::string extension_of( const std::filesystem::path& p )
{
  auto ext = p.extension().string();
  std::transform( ext.begin(), ext.end(), ext.begin(), []( unsigned char c ) { return std::tolower( c ); } );
  return ext;
}

} // namespace

session::session( std::ostream& out, std::ostream& err ) : out_( out ), err_( err ) {}

std::vector<std::string> session::split_commands( const std::string& line )
{
  std::vector<std::string> out;
  std::string current;
  bool quoted = false;
  for ( const auto c : line )
  {
    if ( c == '"' )
      quoted = !quoted;
    if ( c == ';' && !quoted )
    {
      out.push_back( current );
      current.clear();
      continue;
    }
    current += c;
  }
  out.push_back( current );
  return out;
}

std::vector<std::string> session::tokenize( const std::string& command )
{
  std::vector<std::string> out;
  std::string current;
  bool quoted = false, have = false;
  for ( const auto c : command )
  {
    if ( c == '"' )
    {
      quoted = !quoted;
      have = true;
      continue;
    }
    if ( !quoted && std::isspace( static_cast<unsigned char>( c ) ) )
    {
      if ( have )
        out.push_back( current );
      current.clear();
      have = false;
      continue;
    }
    current += c;
    have = true;
  }
  if ( quoted )
    throw usage_error( "unterminated quote" );
  if ( have )
    out.push_back( current );
  return out;
}

int session::execute_line( const std::string& line )
{
  for ( const auto& command : split_commands( line ) )
  {
    try
    {
      const auto tokens = tokenize( command );
      if ( tokens.empty() )
        continue;
      dispatch( tokens );
      ++counter_;
      if ( quit_ )
        return success;
    }
    catch ( const help_shown& )
    {
      ++counter_;
    }
    catch ( const usage_error& e )
    {
      err_ << diag_prefix_ << "error: " << e.what() << "\n";
      return usage_failed;
    }
    catch ( const error& e )
    {
      err_ << diag_prefix_ << "error: " << to_string( e.code() ) << ": " << e.what() << "\n";
      return command_failed;
    }
    catch ( const std::exception& e )
    {
      err_ << diag_prefix_ << "error: " << e.what() << "\n";
      return command_failed;
    }
  }
  return success;
}

int session::run_script( std::istream& in, const std::string& origin )
{
  std::string line;
  std::size_t line_no = 0;
  while ( std::getline( in, line ) )
  {
    ++line_no;
    // strip a comment outside quotes
    bool quoted = false;
    for ( std::size_t i = 0; i < line.size(); ++i )
    {
      if ( line[i] == '"' )
        quoted = !quoted;
      if ( line[i] == '#' && !quoted )
      {
        line.resize( i );
        break;
      }
    }
    diag_prefix_ = origin + ":" + std::to_string( line_no ) + ": ";
    const auto code = execute_line( line );
    diag_prefix_.clear();
    if ( code != success )
      return code;
    if ( quit_ )
      break;
  }
  return success;
}

int session::repl( std::istream& in, bool show_prompt )
{
  std::string line;
  int last = success;
  while ( true )
  {
    if ( show_prompt )
    {
      char prompt[32];
      std::snprintf( prompt, sizeof( prompt ), "aigkit %02zu> ", counter_ );
      out_ << prompt << std::flush;
    }
    if ( !std::getline( in, line ) )
      break;
    if ( const auto hash = line.find( '#' ); hash != std::string::npos )
      line.resize( hash );
    last = execute_line( line );
    if ( quit_ )
      break;
  }
  if ( show_prompt )
    out_ << "\n";
  return last;
}

void session::dispatch( const std::vector<std::string>& tokens )
{
  using handler = void ( session::* )( const std::vector<std::string>& );
  static const std::map<std::string, handler> commands{
      { "read", &session::cmd_read },
      { "read_lib", &session::cmd_read_lib },
      { "strash", &session::cmd_strash },
      { "print_stats", &session::cmd_print_stats },
      { "aigaug", &session::cmd_aigaug },
      { "write_edgelist", &session::cmd_write_edgelist },
      { "write", &session::cmd_write },
      { "write_features", &session::cmd_write_features },
      { "cec", &session::cmd_cec },
      { "sample", &session::cmd_sample },
      { "retime_aug", &session::cmd_retime_aug },
      { "lutmap", &session::cmd_lutmap },
      { "help", &session::cmd_help },
      { "quit", &session::cmd_quit },
  };
  const auto it = commands.find( tokens[0] );
  if ( it == commands.end() )
    throw usage_error( "unknown command '" + tokens[0] + "' (type 'help' for a list)" );
  const std::vector<std::string> args( tokens.begin() + 1, tokens.end() );
  if ( std::find( args.begin(), args.end(), "-h" ) != args.end() ||
       std::find( args.begin(), args.end(), "--help" ) != args.end() )
  {
    out_ << usage_text( *find_help( tokens[0] ) );
    throw help_shown{};
  }
  ( this->*it->second )( args );
}

aig session::read_network_file( const std::filesystem::path& path, std::optional<mapped_netlist>* mapped )
{
  const auto ext = extension_of( path );
  if ( ext == ".aag" || ext == ".aig" )
    return read_aiger_file( path );
  if ( ext == ".blif" )
    return read_blif_file( path );
  if ( ext == ".v" )
  {
    const auto text = read_text_file( path );
    if ( looks_like_mapped_verilog( text ) )
    {
      if ( !library_ )
        throw error( errc::invalid_argument, "'" + path.string() + "' is a cell-level netlist; run read_lib first" );
      auto nl = read_mapped_verilog( text, *library_ );
      auto g = mapped_to_aig( nl, *library_ );
      if ( mapped )
        *mapped = std::move( nl );
      return g;
    }
    return bit_blast( read_word_level_verilog( text ) );
  }
  throw error( errc::invalid_argument, "cannot infer the format of '" + path.string() +
                                           "' (expected .aag, .aig, .blif or .v)" );
}

aig& session::require_aig( const char* command )
{
  if ( !network_ )
    throw error( errc::no_network_loaded, std::string( command ) + ": no network is loaded" );
  if ( mapped_ )
    throw error( errc::invalid_argument, std::string( command ) + ": the current network is a cell-level netlist; run strash first" );
  return *network_;
}

void session::cmd_read( const std::vector<std::string>& args )
{
  CLI::App app{ "read", "read" };
  std::string file;
  app.add_option( "file", file )->required();
  parse( app, "read", args );
  std::optional<mapped_netlist> mapped;
  auto g = read_network_file( file, &mapped );
  network_ = std::move( g );
  mapped_ = std::move( mapped );
}

void session::cmd_read_lib( const std::vector<std::string>& args )
{
  CLI::App app{ "read_lib", "read_lib" };
  std::string file;
  app.add_option( "file", file )->required();
  parse( app, "read_lib", args );
  library_ = read_cell_library_file( file );
  out_ << "Library \"" << std::filesystem::path( file ).stem().string() << "\" from \"" << file << "\" has "
       << library_->size() << " cells.\n";
  if ( const auto multi = library_->num_multi_output(); multi > 0 )
  {
    std::string example;
    for ( const auto& c : library_->cells() )
    {
      if ( c.is_multi_output() )
      {
        example = c.name;
        break;
      }
    }
    out_ << "Warning: Detected " << multi << " multi-output gates (for example, \"" << example
         << "\"); netlists using them are rejected.\n";
  }
}

void session::cmd_strash( const std::vector<std::string>& args )
{
  CLI::App app{ "strash", "strash" };
  parse( app, "strash", args );
  if ( !network_ )
    throw error( errc::no_network_loaded, "strash: no network is loaded" );
  network_ = rebuild( *network_ );
  mapped_.reset();
}

void session::cmd_print_stats( const std::vector<std::string>& args )
{
  CLI::App app{ "print_stats", "print_stats" };
  parse( app, "print_stats", args );
  if ( !network_ )
    throw error( errc::no_network_loaded, "print_stats: no network is loaded" );
  if ( mapped_ )
  {
    out_ << mapped_->name << ": i/o = " << mapped_->inputs.size() << "/" << mapped_->outputs.size()
         << "  lat = 0  cells = " << mapped_->instances.size() << "  wires = " << mapped_->wires.size() << "\n";
    return;
  }
  const auto s = stats( *network_ );
  out_ << network_->name() << ": i/o = " << s.pi_count << "/" << s.po_count << "  lat = " << s.latch_count
       << "  and = " << s.and_count << "  lev = " << s.level << "\n";
}

void session::cmd_aigaug( const std::vector<std::string>& args )
{
  CLI::App app{ "aigaug", "aigaug" };
  aug_config cfg;
  std::string log_file;
  app.add_option( "-s", cfg.seed );
  app.add_option( "-d", log_file );
  app.add_flag( "-z", cfg.zero_rw );
  app.add_flag( "-Z", cfg.zero_rf );
  parse( app, "aigaug", args );
  if ( !log_file.empty() )
    cfg.log_path = log_file;
  auto& g = require_aig( "aigaug" );
  auto result = aig_augment( g, cfg );
  network_ = std::move( result.network );
}

void session::cmd_write_edgelist( const std::vector<std::string>& args )
{
  CLI::App app{ "write_edgelist", "write_edgelist" };
  bool keep_names = false;
  std::string file;
  app.add_flag( "-N", keep_names );
  app.add_option( "file", file )->required();
  parse( app, "write_edgelist", args );
  if ( !network_ )
    throw error( errc::no_network_loaded, "write_edgelist: no network is loaded" );
  const auto text = mapped_ ? write_edgelist_mapped( *mapped_, keep_names ) : write_edgelist_aig( *network_, keep_names );
  write_edgelist_file( file, text );
}

void session::cmd_write_features( const std::vector<std::string>& args )
{
  CLI::App app{ "write_features", "write_features" };
  std::string file;
  app.add_option( "file", file )->required();
  parse( app, "write_features", args );
  if ( !network_ )
    throw error( errc::no_network_loaded, "write_features: no network is loaded" );
  write_file_atomic( file, mapped_ ? write_features_mapped( *mapped_ ) : write_features_aig( *network_ ) );
}

void session::cmd_write( const std::vector<std::string>& args )
{
  CLI::App app{ "write", "write" };
  std::string file;
  app.add_option( "file", file )->required();
  parse( app, "write", args );
  auto& g = require_aig( "write" );
  const auto ext = extension_of( file );
  if ( ext == ".aag" )
    write_aiger_file( g, file, aiger_mode::ascii );
  else if ( ext == ".aig" )
    write_aiger_file( g, file, aiger_mode::binary );
  else if ( ext == ".blif" )
    write_blif_file( g, file );
  else
    throw error( errc::invalid_argument, "write: cannot infer the format of '" + file + "' (expected .aag, .aig or .blif)" );
}

void session::cmd_cec( const std::vector<std::string>& args )
{
  CLI::App app{ "cec", "cec" };
  std::string f1, f2, cnf_path;
  app.add_option( "--dump-cnf", cnf_path );
  app.add_option( "file1", f1 )->required();
  app.add_option( "file2", f2 )->required();
  parse( app, "cec", args );
  const auto a = read_network_file( f1, nullptr );
  const auto b = read_network_file( f2, nullptr );
  if ( !cnf_path.empty() )
    write_file_atomic( cnf_path, miter_cnf( a, b ).to_dimacs() );
  const auto r = cec( a, b );
  switch ( r.verdict )
  {
  case cec_verdict::equivalent: out_ << "Networks are equivalent.\n"; break;
  case cec_verdict::unknown: out_ << "Networks are UNDECIDED (resource limit reached).\n"; break;
  case cec_verdict::not_equivalent:
  {
    out_ << "Networks are NOT equivalent.\n";
    std::ostringstream os;
    for ( std::size_t i = 0; i < r.counterexample.size(); ++i )
    {
      std::string name = i < a.num_pis() ? a.pi_name( i ) : "";
      if ( name.empty() )
        name = i < a.num_pis() ? "pi" + std::to_string( i ) : "latch" + std::to_string( i - a.num_pis() );
      os << ( i ? " " : "" ) << name << "=" << ( r.counterexample[i] ? 1 : 0 );
    }
    out_ << "Counterexample: " << os.str() << "\n";
    if ( r.failing_output && *r.failing_output < a.num_pos() )
    {
      auto name = a.pos()[*r.failing_output].name;
      if ( name.empty() )
        name = "po" + std::to_string( *r.failing_output );
      out_ << "Output " << name << " differs.\n";
    }
    break;
  }
  }
}

void session::cmd_sample( const std::vector<std::string>& args )
{
  CLI::App app{ "sample", "sample" };
  batch_params ps;
  std::string dir;
  app.add_option( "-n", ps.count )->required();
  app.add_option( "-s", ps.base_seed );
  app.add_option( "-o", dir )->required();
  app.add_option( "-k", ps.lut_size );
  app.add_option( "-j", ps.threads );
  parse( app, "sample", args );
  auto& g = require_aig( "sample" );
  const auto m = batch_generate( g, ps, dir );
  std::size_t lo = ~std::size_t{ 0 }, hi = 0;
  for ( const auto& l : m.labels )
  {
    lo = std::min( lo, l.and_count );
    hi = std::max( hi, l.and_count );
  }
  out_ << "Wrote " << m.labels.size() << " verified samples to \"" << dir << "\" (and = " << lo << ".." << hi << ").\n";
}

void session::cmd_retime_aug( const std::vector<std::string>& args )
{
  CLI::App app{ "retime_aug", "retime_aug" };
  retime_config cfg;
  app.add_option( "-s", cfg.seed );
  app.add_option( "-m", cfg.max_moves );
  parse( app, "retime_aug", args );
  auto& g = require_aig( "retime_aug" );
  network_ = retime_augment( g, cfg );
}

void session::cmd_lutmap( const std::vector<std::string>& args )
{
  CLI::App app{ "lutmap", "lutmap" };
  std::uint32_t k = 4;
  app.add_option( "-k", k );
  parse( app, "lutmap", args );
  auto& g = require_aig( "lutmap" );
  const auto m = klut_map( g, k );
  out_ << g.name() << ": k = " << k << "  luts = " << m.lut_count << "  depth = " << m.lut_depth << "\n";
}

void session::cmd_help( const std::vector<std::string>& args )
{
  if ( args.size() > 1 )
    throw usage_error( "help: expected at most one command name" );
  if ( args.size() == 1 )
  {
    const auto* h = find_help( args[0] );
    if ( !h )
      throw usage_error( "help: unknown command '" + args[0] + "'" );
    out_ << usage_text( *h );
    return;
  }
  out_ << "Commands (use '<command> -h' for details):\n";
  for ( const auto& h : help_table() )
  {
    std::string name = h.name;
    name.resize( std::max<std::size_t>( name.size(), 16 ), ' ' );
    out_ << "  " << name << h.summary << "\n";
  }
}

void session::cmd_quit( const std::vector<std::string>& args )
{
  CLI::App app{ "quit", "quit" };
  parse( app, "quit", args );
  quit_ = true;
}

} // namespace aigkit::shell
