#include <aigkit/aiger.hpp>
#include <aigkit/augment.hpp>
#include <aigkit/batch.hpp>
#include <aigkit/cell_library.hpp>
#include <aigkit/edgelist.hpp>
#include <aigkit/equivalence.hpp>
#include <aigkit/errors.hpp>
#include <aigkit/mapped_netlist.hpp>
#include <aigkit/word_level.hpp>

#include <gtest/gtest.h>

#include <json.hpp>

#include <filesystem>
#include <sstream>

#include "test_support.hpp"

using namespace aigkit;

namespace
{

std::vector<std::string> lines_of( const std::string& text )
{
  std::vector<std::string> out;
  std::istringstream is( text );
  for ( std::string l; std::getline( is, l ); )
    out.push_back( l );
  return out;
}

aig mult2b()
{
  return bit_blast( read_word_level_verilog_file( test::data_path( "mult2b.v" ) ) );
}

TEST( Edgelist, AigLineCountAndShapes )
{
  const auto g = mult2b();
  const auto text = write_edgelist_aig( g );
  const auto lines = lines_of( text );
  const auto s = stats( g );
  EXPECT_EQ( lines.size(), s.pi_count + 2 * s.and_count + s.po_count );
  EXPECT_EQ( lines.front(), "1 9 Pi 00" );
  EXPECT_EQ( lines[3], "4 12 Pi 00" );
  for ( std::size_t i = 4; i < 4 + 2 * s.and_count; ++i )
  {
    std::istringstream is( lines[i] );
    std::string a, b, kind, ab;
    is >> a >> b >> kind >> ab;
    EXPECT_EQ( kind, "AIG" );
    EXPECT_TRUE( ab == "00" || ab == "01" || ab == "10" || ab == "11" ) << lines[i];
  }
  EXPECT_EQ( lines.back().substr( lines.back().size() - 8, 6 ), " 8 Po " );
  EXPECT_EQ( text.back(), '\n' );
}

TEST( Edgelist, RoundTripIsEquivalent )
{
  for ( const auto* file : { "c17.aag", "c432.aag" } )
  {
    const auto g = read_aiger_file( test::data_path( file ) );
    for ( const bool names : { false, true } )
    {
      const auto parsed = parse_edgelist( write_edgelist_aig( g, names ) );
      ASSERT_TRUE( parsed.network.has_value() );
      EXPECT_EQ( parsed.flavor, edgelist_flavor::aig );
      EXPECT_EQ( stats( *parsed.network ), stats( g ) ) << file;
      EXPECT_EQ( cec( g, *parsed.network ).verdict, cec_verdict::equivalent ) << file;
    }
  }
  const auto m = mult2b();
  EXPECT_EQ( cec( m, *parse_edgelist( write_edgelist_aig( m ) ).network ).verdict, cec_verdict::equivalent );
}

TEST( Edgelist, RewriteAfterParseIsByteIdentical )
{
  const auto g = read_aiger_file( test::data_path( "c880.aag" ) );
  for ( std::uint64_t seed = 0; seed < 5; ++seed )
  {
    const auto sample = aig_augment( g, test::seeded( seed ) ).network;
    const auto text = write_edgelist_aig( sample );
    const auto parsed = parse_edgelist( text );
    ASSERT_TRUE( parsed.network.has_value() );
    EXPECT_EQ( write_edgelist_aig( *parsed.network ), text ) << "seed " << seed;
    EXPECT_EQ( write_features_aig( *parsed.network ), write_features_aig( sample ) ) << "seed " << seed;
  }
}

TEST( Edgelist, SequentialRoundTripYieldsCombinationalCut )
{
  // latch outputs and inputs are written as Pi/Po lines, so they come back as ports
  const auto g = read_aiger_file( test::data_path( "s27.aag" ) );
  const auto parsed = parse_edgelist( write_edgelist_aig( g ) );
  ASSERT_TRUE( parsed.network.has_value() );
  const auto s = stats( *parsed.network );
  EXPECT_EQ( s.pi_count, g.num_cis() );
  EXPECT_EQ( s.po_count, g.num_cos() );
  EXPECT_EQ( s.latch_count, 0u );
  EXPECT_EQ( s.and_count, stats( g ).and_count );
  EXPECT_EQ( test::reference_table( *parsed.network ), test::reference_table( g ) );
}

TEST( Edgelist, ComplementedAndConstantOutputs )
{
  aig g;
  const auto a = g.create_pi( "a" ), b = g.create_pi( "b" );
  g.create_po( !g.create_and( a, b ), "nand" );
  g.create_po( const_true, "one" );
  g.create_po( !a, "na" );
  const auto lines = lines_of( write_edgelist_aig( g ) );
  EXPECT_EQ( lines.size(), 2u + 2u + 3u );
  EXPECT_EQ( lines[5], "0 4 Po 10" );
  EXPECT_EQ( lines[6], "6 5 Po 10" );
  const auto parsed = parse_edgelist( write_edgelist_aig( g ) );
  EXPECT_EQ( cec( g, *parsed.network ).verdict, cec_verdict::equivalent );
}

TEST( Edgelist, KeepNamesUsesPortNames )
{
  const auto g = read_aiger_file( test::data_path( "c17.aag" ) );
  const auto text = write_edgelist_aig( g, true );
  const auto lines = lines_of( text );
  std::istringstream is( lines[0] );
  std::string ext, internal;
  is >> ext >> internal;
  EXPECT_EQ( ext, "1" );
  EXPECT_EQ( internal, g.pi_name( 0 ) );
  EXPECT_NE( text.find( " " + g.pos()[0].name + " Po" ), std::string::npos );
}

TEST( Edgelist, Deterministic )
{
  const auto g = read_aiger_file( test::data_path( "c880.aag" ) );
  EXPECT_EQ( write_edgelist_aig( g ), write_edgelist_aig( read_aiger( write_aiger( g ) ) ) );
}

TEST( Edgelist, ParsesHandWrittenDocument )
{
  const std::string text =
      "1 9 Pi 00\n2 10 Pi 00\n3 11 Pi 00\n4 12 Pi 00\n9 23 AIG 11\n11 23 AIG 11\n10 27 AIG 11\n11 27 AIG 11\n"
      "9 28 AIG 11\n12 28 AIG 11\n27 29 AIG 11\n28 29 AIG 11\n27 30 AIG 00\n28 30 AIG 00\n29 24 AIG 00\n"
      "30 24 AIG 00\n10 31 AIG 11\n12 31 AIG 11\n29 26 AIG 11\n31 26 AIG 11\n29 32 AIG 00\n31 32 AIG 00\n"
      "26 25 AIG 00\n32 25 AIG 00\n23 5 Po 00\n24 6 Po 00\n25 7 Po 00\n26 8 Po 00\n";
  const auto parsed = parse_edgelist( text );
  EXPECT_EQ( parsed.num_lines, 28u );
  EXPECT_EQ( parsed.edges.size(), 28u );
  ASSERT_TRUE( parsed.network.has_value() );
  const auto s = stats( *parsed.network );
  EXPECT_EQ( s.pi_count, 4u );
  EXPECT_EQ( s.po_count, 4u );
  EXPECT_EQ( s.and_count, 10u );
  EXPECT_EQ( s.level, 4u );
}

TEST( Edgelist, InconsistentEmbeddingIsRejected )
{
  try
  {
    parse_edgelist( "1 3 Pi 00\n2 4 Pi 00\n3 6 AIG 10\n4 6 AIG 01\n6 5 Po 00\n" );
    FAIL();
  }
  catch ( const error& e )
  {
    EXPECT_EQ( e.code(), errc::inconsistent_feature );
  }
  EXPECT_THROW( parse_edgelist( "1 3 Pi 00\n3 6 AIG 00\n6 5 Po 00\n" ), error );
  EXPECT_THROW( parse_edgelist( "1 3 Pi\n" ), error );
}

TEST( Edgelist, AigFeatures )
{
  const auto g = mult2b();
  const auto lines = lines_of( write_features_aig( g ) );
  ASSERT_FALSE( lines.empty() );
  EXPECT_EQ( lines[0], "node_id,f1,f2" );
  EXPECT_EQ( lines.size(), 1 + g.num_pis() + stats( g ).and_count );
  EXPECT_EQ( lines[1], "9,0,0" );
}

TEST( Edgelist, MappedFlavor )
{
  const auto lib = read_cell_library_file( test::data_path( "asap7_subset.lib" ) );
  const auto nl = read_mapped_verilog_file( test::data_path( "mult2b_mapped.v" ), lib );
  const auto text = write_edgelist_mapped( nl );
  const auto lines = lines_of( text );
  EXPECT_EQ( lines.size(), 18u );
  std::size_t instance_lines = 0;
  for ( const auto& l : lines )
  {
    std::istringstream is( l );
    std::vector<std::string> tok;
    for ( std::string t; is >> t; )
      tok.push_back( t );
    if ( tok.back() == "00" || tok.back() == "10" )
      continue;
    const auto* c = lib.find( tok.back() );
    ASSERT_NE( c, nullptr ) << l;
    EXPECT_EQ( tok.size(), c->inputs.size() + 2 ) << l;
    ++instance_lines;
  }
  EXPECT_EQ( instance_lines, 10u );
  EXPECT_EQ( lines[6], "13 14 15 NOR2xp33_ASAP7_75t_L" );
  EXPECT_EQ( lines[8], "9 12 10 11 17 AOI22xp33_ASAP7_75t_L" );
  const auto parsed = parse_edgelist( text );
  EXPECT_EQ( parsed.flavor, edgelist_flavor::mapped );
  EXPECT_FALSE( parsed.network.has_value() );
  const auto features = lines_of( write_features_mapped( nl ) );
  EXPECT_EQ( features[0].rfind( "# vocab:", 0 ), 0u );
  EXPECT_EQ( features.size(), 2u + 4u + 10u );
}

class BatchTest : public ::testing::Test
{
protected:
  void SetUp() override
  {
    dir_ = std::filesystem::temp_directory_path() /
           ( "aigkit_batch_" + std::string( ::testing::UnitTest::GetInstance()->current_test_info()->name() ) );
    std::filesystem::remove_all( dir_ );
  }
  void TearDown() override { std::filesystem::remove_all( dir_ ); }
  std::filesystem::path dir_;
};

TEST_F( BatchTest, WritesSamplesLabelsAndManifest )
{
  const auto g = read_aiger_file( test::data_path( "c432.aag" ) );
  batch_params ps;
  ps.count = 6;
  ps.base_seed = 10;
  const auto m = batch_generate( g, ps, dir_ );
  ASSERT_EQ( m.labels.size(), 6u );
  for ( std::size_t i = 0; i < 6; ++i )
  {
    EXPECT_EQ( m.labels[i].seed, 10 + i );
    const auto sample = read_text_file( dir_ / m.files[i] );
    const auto parsed = parse_edgelist( sample );
    EXPECT_EQ( stats( *parsed.network ).and_count, m.labels[i].and_count );
    EXPECT_EQ( cec( g, *parsed.network ).verdict, cec_verdict::equivalent );
    EXPECT_EQ( read_text_file( dir_ / feature_file_name( i ) ), write_features_aig( *parsed.network ) );
  }
  EXPECT_EQ( read_text_file( dir_ / "labels.csv" ), labels_csv( m.labels ) );
  const auto manifest = nlohmann::json::parse( read_text_file( dir_ / "manifest.json" ) );
  EXPECT_EQ( manifest["design"], "c432" );
  EXPECT_EQ( manifest["samples"].size(), 6u );
}

TEST_F( BatchTest, ThreadCountDoesNotChangeOutput )
{
  const auto g = read_aiger_file( test::data_path( "c880.aag" ) );
  batch_params ps;
  ps.count = 8;
  const auto single = batch_generate( g, ps, dir_ / "one" );
  ps.threads = 4;
  const auto multi = batch_generate( g, ps, dir_ / "four" );
  EXPECT_EQ( single.labels, multi.labels );
  for ( const auto& f : single.files )
    EXPECT_EQ( read_text_file( dir_ / "one" / f ), read_text_file( dir_ / "four" / f ) );
}

} // namespace
