#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "canalyze/cli.hpp"
#include "canalyze/layers.hpp"
#include "canalyze/parse.hpp"

using namespace canalyze;
using nlohmann::json;

namespace
{

struct Result
{
  int status;
  std::string out;
  std::string err;
};

Result run( std::vector<std::string> args, const std::string& input = "" )
{
  args.insert( args.begin(), "canalyze" );
  std::vector<const char*> argv;
  for ( const auto& a : args )
  {
    argv.push_back( a.c_str() );
  }
  std::istringstream in( input );
  std::ostringstream out, err;
  const int status = run_cli( static_cast<int>( argv.size() ), argv.data(), in, out, err );
  return {status, out.str(), err.str()};
}

/* "key: value" lines of the human rendering; repeated "layer i" keys are kept apart */
std::map<std::string, std::string> human_fields( const std::string& text )
{
  std::map<std::string, std::string> fields;
  std::istringstream is( text );
  for ( std::string line; std::getline( is, line ); )
  {
    const auto colon = line.find( ": " );
    if ( colon != std::string::npos )
    {
      fields[line.substr( 0, colon )] = line.substr( colon + 2u );
    }
  }
  return fields;
}

/* rebuilds the decomposition from the human rendering */
LayerDecomposition from_human( const std::string& text )
{
  auto fields = human_fields( text );
  LayerDecomposition d;
  d.num_vars = static_cast<unsigned>( std::stoul( fields.at( "n" ) ) );
  const auto layers = std::stoul( fields.at( "num_layers" ) );
  for ( std::size_t i = 1; i <= layers; ++i )
  {
    std::istringstream is( fields.at( "layer " + std::to_string( i ) ) );
    std::string token;
    is >> token; /* output=b */
    Layer layer{{}, token.back() == '1'};
    while ( is >> token )
    {
      const auto eq = token.find( '=' );
      layer.entries.push_back( {static_cast<unsigned>( std::stoul( token.substr( 1, eq - 1u ) ) ), token.back() == '1'} );
    }
    d.layers.push_back( std::move( layer ) );
  }
  d.core = parse_anf( fields.at( "core" ), d.num_vars );
  if ( fields.at( "fictitious" ) != "none" )
  {
    std::istringstream is( fields.at( "fictitious" ) );
    for ( std::string token; is >> token; )
    {
      d.fictitious.push_back( static_cast<unsigned>( std::stoul( token.substr( 1 ) ) ) );
    }
  }
  EXPECT_EQ( fields.at( "depth" ), std::to_string( d.depth() ) );
  EXPECT_EQ( fields.at( "is_ncf" ), d.is_ncf() ? "yes" : "no" );
  return d;
}

LayerDecomposition from_json( const json& j )
{
  LayerDecomposition d;
  d.num_vars = j.at( "n" ).get<unsigned>();
  for ( const auto& layer : j.at( "layers" ) )
  {
    Layer l{{}, layer.at( "output" ).get<int>() == 1};
    for ( const auto& v : layer.at( "vars" ) )
    {
      l.entries.push_back( {v.at( "index" ).get<unsigned>(), v.at( "input" ).get<int>() == 1} );
    }
    d.layers.push_back( std::move( l ) );
  }
  d.core = parse_anf( j.at( "core" ).get<std::string>(), d.num_vars );
  d.fictitious = j.at( "fictitious" ).get<std::vector<unsigned>>();
  EXPECT_EQ( j.at( "depth" ).get<unsigned>(), d.depth() );
  EXPECT_EQ( j.at( "num_layers" ).get<std::size_t>(), d.layers.size() );
  EXPECT_EQ( j.at( "layer_vector" ).get<std::vector<unsigned>>(), d.layer_vector() );
  EXPECT_EQ( j.at( "is_ncf" ).get<bool>(), d.is_ncf() );
  return d;
}

} // namespace

TEST( Cli, AnalyzeThreeVariableExample )
{
  const auto r = run( {"analyze", "x1 & (x2 | x3)"} );
  ASSERT_EQ( r.status, 0 ) << r.err;
  const auto fields = human_fields( r.out );
  EXPECT_EQ( fields.at( "depth" ), "3" );
  EXPECT_EQ( fields.at( "layer_vector" ), "1 2" );
  EXPECT_EQ( fields.at( "layer 1" ), "output=0 x1=0" );
  EXPECT_EQ( fields.at( "layer 2" ), "output=1 x2=1 x3=1" );
  EXPECT_EQ( fields.at( "is_ncf" ), "yes" );
}

TEST( Cli, JsonSchemaIsStable )
{
  const auto r = run( {"analyze", "--json", "x1 & (x2 | x3)"} );
  ASSERT_EQ( r.status, 0 ) << r.err;
  const auto j = json::parse( r.out );
  std::vector<std::string> keys;
  for ( const auto& [key, value] : j.items() )
  {
    keys.push_back( key );
  }
  EXPECT_EQ( keys, ( std::vector<std::string>{"core", "depth", "fictitious", "is_ncf", "layer_vector", "layers", "n",
                                               "num_layers"} ) );
  for ( const auto& layer : j.at( "layers" ) )
  {
    EXPECT_EQ( layer.size(), 2u );
    for ( const auto& v : layer.at( "vars" ) )
    {
      EXPECT_EQ( v.size(), 2u );
      EXPECT_TRUE( v.contains( "index" ) && v.contains( "input" ) );
    }
  }
}

TEST( Cli, HumanAndJsonDescribeTheSameDecomposition )
{
  const std::vector<std::vector<std::string>> inputs{
      {"x1 & (x2 | x3)"},
      {"--format", "anf", "x1*x2*x3*x4 + x1*x2*x3 + x2*x3*x4 + x2*x3 + x4"},
      {"--format", "table", "0110100110010110"},
      {"x2 & !x4 | x5 & x6", "--n", "7"},
      {"--format", "anf", "x1*x2 + x3*x4 + x1"},
      {"0"}};
  for ( const auto& input : inputs )
  {
    auto human_args = input, json_args = input;
    human_args.insert( human_args.begin(), "analyze" );
    json_args.insert( json_args.begin(), {"analyze", "--json"} );
    const auto human = run( human_args );
    const auto machine = run( json_args );
    ASSERT_EQ( human.status, 0 ) << human.err;
    ASSERT_EQ( machine.status, 0 ) << machine.err;
    const auto d = from_json( json::parse( machine.out ) );
    EXPECT_EQ( from_human( human.out ), d ) << input.back();
    EXPECT_NO_THROW( validate( d ) );
  }
}

TEST( Cli, AnalyzeFileWithSeveralFunctions )
{
  const auto r = run( {"analyze", "--json", "--file", "-", "--format", "logic"}, "a: x1 & x2\n# skip\nb: x1 | x2 | x3\n" );
  ASSERT_EQ( r.status, 0 ) << r.err;
  std::istringstream lines( r.out );
  std::vector<json> objects;
  for ( std::string line; std::getline( lines, line ); )
  {
    objects.push_back( json::parse( line ) );
  }
  ASSERT_EQ( objects.size(), 2u );
  EXPECT_EQ( objects[0].at( "n" ), 2 );
  EXPECT_EQ( objects[1].at( "layer_vector" ), json::array( {3} ) );

  const auto human = run( {"analyze", "-f", "-", "--format", "logic"}, "a: x1 & x2\nb: x1 | x2 | x3\n" );
  EXPECT_NE( human.out.find( "# a\n" ), std::string::npos );
  EXPECT_NE( human.out.find( "# b\n" ), std::string::npos );
}

TEST( Cli, FilesNeedAFormat )
{
  const auto r = run( {"analyze", "--file", "-"}, "x1 & x2\n" );
  EXPECT_EQ( r.status, 1 );
  EXPECT_NE( r.err.find( "--format" ), std::string::npos );
}

TEST( Cli, DnfOfWorkedExample )
{
  const auto r = run( {"dnf", "--format", "anf",
                       "x1*x2*x3*x4 + x1*x2*x3 + x1*x2*x4 + x2*x3*x4 + x1*x2 + x1*x3 + x2*x3 + x2*x4 + x1 + x2 + x3 + 1"} );
  ASSERT_EQ( r.status, 0 ) << r.err;
  EXPECT_EQ( r.out, "!x1 & !x3 & !x2 | !x1 & !x3 & x4\n" );

  const auto j = run( {"dnf", "--json", "x4 | !x1 & x2 & x3"} );
  ASSERT_EQ( j.status, 0 );
  EXPECT_EQ( json::parse( j.out ).at( "clauses" ), 2 );
}

TEST( Cli, DnfOfNonNestedFunctionExitsWithTwo )
{
  const auto r = run( {"dnf", "--format", "table", "0110"} );
  EXPECT_EQ( r.status, 2 );
  EXPECT_TRUE( r.out.empty() );
  EXPECT_NE( r.err.find( "not nested canalizing" ), std::string::npos );
}

TEST( Cli, ParseAndUsageErrorsExitWithOne )
{
  EXPECT_EQ( run( {"analyze", "x1 ^ x2"} ).status, 1 );
  EXPECT_EQ( run( {"analyze", "--format", "anf", "x1 x2"} ).status, 1 );
  EXPECT_EQ( run( {"frobnicate"} ).status, 1 );
  EXPECT_EQ( run( {} ).status, 1 );
  EXPECT_EQ( run( {"analyze"} ).status, 1 );
  EXPECT_EQ( run( {"analyze", "--format", "blif", "x1"} ).status, 1 );
  EXPECT_EQ( run( {"analyze", "x1", "--file", "-"} ).status, 1 );
  EXPECT_EQ( run( {"analyze", "--file", "/nonexistent/functions.txt", "--format", "logic"} ).status, 1 );
  EXPECT_EQ( run( {"generate", "--n", "3", "--class", "noncanalizing"} ).status, 1 );
  EXPECT_EQ( run( {"--help"} ).status, 0 );

  const auto r = run( {"analyze", "x1 & (x2 | x0)"} );
  EXPECT_NE( r.err.find( "position 11" ), std::string::npos ) << r.err;
}

TEST( Cli, NcfCheck )
{
  const auto ok = run( {"ncf-check", "x1 & (x2 | x3)", "--order", "1,2,3", "--inputs", "0,1,1", "--json"} );
  ASSERT_EQ( ok.status, 0 ) << ok.err;
  const auto j = json::parse( ok.out );
  EXPECT_EQ( j.at( "partition" ), json::array( {1, 2} ) );
  EXPECT_EQ( j.at( "checks" ), 2 );
  EXPECT_TRUE( j.at( "match" ).get<bool>() );

  const auto bad = run( {"ncf-check", "x1 & (x2 | x3)", "--order", "x2,x1,x3", "--inputs", "101"} );
  ASSERT_EQ( bad.status, 0 ) << bad.err;
  EXPECT_NE( bad.out.find( "match: no" ), std::string::npos );

  const auto wrong_outputs =
      run( {"ncf-check", "x1 & (x2 | x3)", "--order", "1,2,3", "--inputs", "0,1,1", "--outputs", "1,0,0"} );
  EXPECT_NE( wrong_outputs.out.find( "match: no" ), std::string::npos );

  EXPECT_EQ( run( {"ncf-check", "x1 & (x2 | x3)", "--order", "1,2", "--inputs", "0,1"} ).status, 1 );
  EXPECT_EQ( run( {"ncf-check", "--format", "table", "0110", "--order", "1,2", "--inputs", "0,0"} ).status, 2 );
}

TEST( Cli, EnumerateFromStdin )
{
  const std::string spec = "layer output=0: x1=1, x2=1\nlayer output=?: x3=?, x4=0\n";
  const auto r = run( {"enumerate", "-"}, spec );
  ASSERT_EQ( r.status, 0 ) << r.err;
  EXPECT_EQ( r.out.rfind( "2 functions\n", 0 ), 0u );
  EXPECT_NE( r.out.find( "x1*x2*x3*x4 + x1*x3*x4 + x2*x3*x4 + x1*x2 + x3*x4 + x1 + x2 + 1" ), std::string::npos );

  const auto j = run( {"enumerate", "--json", "-"}, spec );
  ASSERT_EQ( j.status, 0 );
  const auto list = json::parse( j.out );
  ASSERT_EQ( list.size(), 2u );
  for ( const auto& e : list )
  {
    EXPECT_EQ( tt_from_anf( parse_anf( e.at( "anf" ).get<std::string>(), 4u ) ).to_string(), e.at( "table" ) );
    EXPECT_EQ( e.at( "layers" ).size(), 2u );
  }
}

TEST( Cli, EnumerateRejectsBadSpecs )
{
  EXPECT_EQ( run( {"enumerate", "-"}, "layer output=1: x1=1\nlayer output=1: x2=1, x3=1\n" ).status, 1 );
  EXPECT_EQ( run( {"enumerate", "-"}, "layer out=1: x1=1\n" ).status, 1 );
}

TEST( Cli, GenerateIsDeterministic )
{
  const auto a = run( {"generate", "--class", "ncf", "--n", "5", "--count", "4", "--seed", "17"} );
  const auto b = run( {"generate", "--class", "ncf", "--n", "5", "--count", "4", "--seed", "17"} );
  ASSERT_EQ( a.status, 0 ) << a.err;
  EXPECT_EQ( a.out, b.out );
  std::istringstream lines( a.out );
  int count = 0;
  for ( std::string line; std::getline( lines, line ); ++count )
  {
    ASSERT_EQ( line.size(), 32u );
    EXPECT_TRUE( find_layers_tt( parse_table( line ) ).is_ncf() );
  }
  EXPECT_EQ( count, 4 );
}

TEST( Cli, BenchWritesCsv )
{
  const auto path = std::filesystem::temp_directory_path() / "canalyze_cli_bench.csv";
  const auto r = run( {"bench", "--ns", "4,5", "--trials", "2", "--seed", "3", "--out", path.string()} );
  ASSERT_EQ( r.status, 0 ) << r.err;
  std::ifstream file( path );
  std::string header;
  std::getline( file, header );
  EXPECT_EQ( header, "algorithm,class,n,precompute,trial,seconds" );
  int rows = 0;
  for ( std::string line; std::getline( file, line ); )
  {
    ++rows;
  }
  /* 2 sizes x 2 classes x 3 variants x (2 trials + mean) */
  EXPECT_EQ( rows, 36 );
  std::filesystem::remove( path );

  EXPECT_EQ( run( {"bench", "--ns", "6-4"} ).status, 1 );
}
