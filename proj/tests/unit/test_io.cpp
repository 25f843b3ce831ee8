#include <aigkit/aiger.hpp>
#include <aigkit/blif.hpp>
#include <aigkit/cell_library.hpp>
#include <aigkit/errors.hpp>
#include <aigkit/mapped_netlist.hpp>
#include <aigkit/word_level.hpp>

#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace aigkit;

namespace
{

template<class Fn>
errc error_code_of( Fn&& fn )
{
  try
  {
    fn();
  }
  catch ( const error& e )
  {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return errc::invalid_argument;
}

TEST( Aiger, ReadsAsciiWithSymbols )
{
  const auto g = read_aiger_file( test::data_path( "c17.aag" ) );
  EXPECT_EQ( g.num_pis(), 5u );
  EXPECT_EQ( g.num_pos(), 2u );
  EXPECT_EQ( and_count( g ), 6u );
  EXPECT_EQ( g.name(), "c17" );
  EXPECT_FALSE( g.pi_name( 0 ).empty() );
}

TEST( Aiger, AsciiAndBinaryRoundTrip )
{
  for ( const auto* file : { "c17.aag", "c432.aag", "s27.aag" } )
  {
    const auto g = read_aiger_file( test::data_path( file ) );
    for ( const auto mode : { aiger_mode::ascii, aiger_mode::binary } )
    {
      const auto h = read_aiger( write_aiger( g, mode ) );
      EXPECT_EQ( stats( h ), stats( g ) ) << file;
      EXPECT_EQ( h.pi_name( 0 ), g.pi_name( 0 ) );
      if ( g.num_cis() <= 12 )
      {
        EXPECT_EQ( test::reference_table( h ), test::reference_table( g ) );
      }
    }
  }
}

TEST( Aiger, LatchInitValues )
{
  const auto g = read_aiger( "aag 3 1 2 1 0\n2\n4 2 1\n6 4 0\n6\n" );
  ASSERT_EQ( g.num_latches(), 2u );
  EXPECT_EQ( g.latches()[0].init, 1u );
  EXPECT_EQ( g.latches()[1].init, 0u );
  const auto h = read_aiger( write_aiger( g ) );
  EXPECT_EQ( h.latches()[0].init, 1u );
}

TEST( Aiger, MalformedInputReportsLine )
{
  try
  {
    read_aiger( "aag 3 2 0 1 1\n2\n4\n6\n6 2 x\n" );
    FAIL();
  }
  catch ( const parse_error& e )
  {
    EXPECT_EQ( e.position(), 5u );
  }
  EXPECT_EQ( error_code_of( [] { read_aiger( "abc 1 2 3" ); } ), errc::parse_error );
  EXPECT_EQ( error_code_of( [] { read_aiger_file( "/nonexistent/file.aag" ); } ), errc::io_error );
}

TEST( Blif, RoundTripPreservesFunction )
{
  for ( std::uint64_t seed = 0; seed < 10; ++seed )
  {
    const auto g = test::random_aig( seed, { 6, 30, 3, 2 } );
    const auto h = read_blif( write_blif( g ) );
    EXPECT_EQ( h.num_latches(), g.num_latches() );
    EXPECT_EQ( test::reference_table( h ), test::reference_table( g ) );
  }
}

TEST( Blif, ReadsCoversWithDontCares )
{
  const auto g = read_blif( ".model t\n.inputs a b c\n.outputs y z\n.names a b c y\n1-1 1\n01- 1\n.names a z\n0 1\n.end\n" );
  EXPECT_EQ( g.name(), "t" );
  for ( unsigned m = 0; m < 8; ++m )
  {
    const bool a = m & 1, b = m & 2, c = m & 4;
    const auto out = test::reference_eval( g, { a, b, c } );
    EXPECT_EQ( out[0], ( a && c ) || ( !a && b ) );
    EXPECT_EQ( out[1], !a );
  }
}

TEST( Blif, RejectsUnsupportedDirective )
{
  EXPECT_EQ( error_code_of( [] { read_blif( ".model t\n.inputs a\n.outputs y\n.subckt foo a=a y=y\n.end\n" ); } ),
             errc::unsupported_directive );
}

TEST( CellLibrary, ParsesCellsAndMultiOutputWarnings )
{
  const auto lib = read_cell_library_file( test::data_path( "asap7_subset.lib" ) );
  EXPECT_EQ( lib.size(), 17u );
  EXPECT_EQ( lib.num_multi_output(), 2u );
  const auto* aoi = lib.find( "AOI22xp33_ASAP7_75t_L" );
  ASSERT_NE( aoi, nullptr );
  EXPECT_EQ( aoi->inputs.size(), 4u );
  // !(A1 A2 + B1 B2) evaluated directly
  const auto tt = aoi->truth();
  for ( unsigned m = 0; m < 16; ++m )
    EXPECT_EQ( tt.get_bit( m ), !( ( ( m & 1 ) && ( m & 2 ) ) || ( ( m & 4 ) && ( m & 8 ) ) ) );
}

TEST( CellLibrary, Errors )
{
  EXPECT_EQ( error_code_of( [] { read_cell_library( "cell A inputs X output Y function X\ncell A inputs X output Y function X\n" ); } ),
             errc::duplicate_cell );
  EXPECT_EQ( error_code_of( [] { read_cell_library( "cell A inputs X output Y function (AND X Z)\n" ); } ),
             errc::parse_error );
}

TEST( MappedVerilog, LoadsMulti2 )
{
  const auto lib = read_cell_library_file( test::data_path( "asap7_subset.lib" ) );
  const auto nl = read_mapped_verilog_file( test::data_path( "mult2b_mapped.v" ), lib );
  EXPECT_EQ( nl.name, "Multi2" );
  EXPECT_EQ( nl.instances.size(), 10u );
  EXPECT_EQ( nl.wires.size(), 6u );
  EXPECT_EQ( nl.inputs.size(), 4u );
  EXPECT_EQ( nl.outputs.size(), 4u );
  const auto g = mapped_to_aig( nl, lib );
  for ( unsigned m = 0; m < 16; ++m )
  {
    const unsigned a = ( m & 1 ) | ( ( m >> 1 ) & 1 ) << 1;  // a0 a1
    const unsigned b = ( ( m >> 2 ) & 1 ) | ( ( m >> 3 ) & 1 ) << 1;
    const auto out = test::reference_eval( g, { bool( m & 1 ), bool( m & 2 ), bool( m & 4 ), bool( m & 8 ) } );
    const unsigned p = a * b;
    for ( unsigned k = 0; k < 4; ++k )
      EXPECT_EQ( out[k], ( ( p >> k ) & 1u ) == 1u ) << m;
  }
}

TEST( MappedVerilog, Errors )
{
  const auto lib = read_cell_library_file( test::data_path( "asap7_subset.lib" ) );
  const std::string head = "module t (a, b, y);\n input a, b;\n output y;\n";
  EXPECT_EQ( error_code_of( [&] { read_mapped_verilog( head + " FOO g0(.A(a), .Y(y));\nendmodule\n", lib ); } ),
             errc::unknown_cell );
  EXPECT_EQ( error_code_of( [&] {
               read_mapped_verilog( head + " INVx1_ASAP7_75t_L g0(.A(a), .Y(y));\n INVx1_ASAP7_75t_L g1(.A(b), .Y(y));\nendmodule\n", lib );
             } ),
             errc::multiple_drivers );
  EXPECT_EQ( error_code_of( [&] { read_mapped_verilog( head + " wire w;\n AND2x2_ASAP7_75t_L g0(.A(a), .B(w), .Y(y));\nendmodule\n", lib ); } ),
             errc::undriven_net );
  EXPECT_EQ( error_code_of( [&] {
               read_mapped_verilog( head + " wire w;\n AND2x2_ASAP7_75t_L g0(.A(a), .B(y), .Y(w));\n AND2x2_ASAP7_75t_L g1(.A(w), .B(b), .Y(y));\nendmodule\n", lib );
             } ),
             errc::cycle_detected );
  EXPECT_EQ( error_code_of( [&] { read_mapped_verilog( head + " FAx1_ASAP7_75t_L g0(.A(a), .B(b), .CI(a), .CON(y), .SN(y));\nendmodule\n", lib ); } ),
             errc::unsupported_feature );
  EXPECT_EQ( error_code_of( [&] { read_mapped_verilog( head + " assign y = a;\nendmodule\n", lib ); } ),
             errc::unsupported_feature );
}

TEST( WordLevel, Mult2bBitBlastsToMultiplication )
{
  const auto m = read_word_level_verilog_file( test::data_path( "mult2b.v" ) );
  EXPECT_EQ( m.name, "mult2b" );
  const auto g = bit_blast( m );
  EXPECT_EQ( g.num_pis(), 4u );
  EXPECT_EQ( g.num_pos(), 4u );
  EXPECT_EQ( g.pi_name( 0 ), "a[0]" );
  EXPECT_EQ( g.pos()[3].name, "z[3]" );
  const auto s = stats( g );
  EXPECT_LE( s.and_count, 13u );
  EXPECT_LE( s.level, 6u );
  for ( unsigned a = 0; a < 4; ++a )
  {
    for ( unsigned b = 0; b < 4; ++b )
    {
      const auto out = test::reference_eval( g, { bool( a & 1 ), bool( a & 2 ), bool( b & 1 ), bool( b & 2 ) } );
      unsigned z = 0;
      for ( unsigned k = 0; k < 4; ++k )
        z |= unsigned( out[k] ) << k;
      EXPECT_EQ( z, a * b );
    }
  }
}

TEST( WordLevel, ArithmeticIsModuloTargetWidth )
{
  const auto m = read_word_level_verilog(
      "module ops(input [2:0] a, input [2:0] b, output [2:0] s, output [2:0] d, output [2:0] x, output [3:0] w);\n"
      "  assign s = a + b;\n  assign d = a - b;\n  assign x = (a & ~b) | (a ^ 3'd5);\n  assign w = a * b + 4'd1;\nendmodule\n" );
  const auto g = bit_blast( m );
  for ( unsigned a = 0; a < 8; ++a )
  {
    for ( unsigned b = 0; b < 8; ++b )
    {
      std::vector<bool> in;
      for ( unsigned k = 0; k < 3; ++k )
        in.push_back( ( a >> k ) & 1 );
      for ( unsigned k = 0; k < 3; ++k )
        in.push_back( ( b >> k ) & 1 );
      const auto out = test::reference_eval( g, in );
      auto word = [&]( std::size_t first, unsigned width ) {
        unsigned v = 0;
        for ( unsigned k = 0; k < width; ++k )
          v |= unsigned( out[first + k] ) << k;
        return v;
      };
      EXPECT_EQ( word( 0, 3 ), ( a + b ) & 7u );
      EXPECT_EQ( word( 3, 3 ), ( a - b ) & 7u );
      EXPECT_EQ( word( 6, 3 ), ( ( a & ~b ) | ( a ^ 5u ) ) & 7u );
      EXPECT_EQ( word( 9, 4 ), ( a * b + 1 ) & 15u );
    }
  }
}

TEST( WordLevel, Errors )
{
  EXPECT_EQ( error_code_of( [] { read_word_level_verilog( "module m(input [3:0] a, output [1:0] z);\n assign z = a;\nendmodule\n" ); } ),
             errc::width_mismatch );
  EXPECT_EQ( error_code_of( [] { read_word_level_verilog( "module m(input [1:0] a, output [1:0] z);\n assign z = a / a;\nendmodule\n" ); } ),
             errc::unsupported_operator );
  EXPECT_EQ( error_code_of( [] { read_word_level_verilog( "module m(input a, output z);\n assign z = a\nendmodule\n" ); } ),
             errc::parse_error );
}

} // namespace
