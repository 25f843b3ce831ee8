/*
  aigkit: interactive shell and script runner.

    aigkit                 interactive prompt
    aigkit script.txt      run a script file
    aigkit -c "cmd; cmd"   run commands from the command line
*/

#include "shell.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>

#include <unistd.h>

int main( int argc, char** argv )
{
  CLI::App app{ "aigkit - And-Inverter Graph augmentation and export toolkit", "aigkit" };
  std::string script;
  std::string commands;
  app.add_option( "script", script, "script file with one or more commands per line" );
  app.add_option( "-c,--command", commands, "semicolon-separated commands to run" );
  CLI11_PARSE( app, argc, argv );

  aigkit::shell::session session( std::cout, std::cerr );
  if ( !commands.empty() )
  {
    const auto code = session.execute_line( commands );
    if ( code != aigkit::shell::success || session.quit_requested() || script.empty() )
      return code;
  }
  if ( !script.empty() )
  {
    std::ifstream in( script );
    if ( !in )
    {
      std::cerr << "error: cannot open script '" << script << "'\n";
      return aigkit::shell::command_failed;
    }
    return session.run_script( in, script );
  }
  return session.repl( std::cin, isatty( STDIN_FILENO ) != 0 );
}
