#include "canalyze/cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "canalyze/dnf.hpp"
#include "canalyze/errors.hpp"
#include "canalyze/genbench.hpp"
#include "canalyze/ncf_fast.hpp"
#include "canalyze/parse.hpp"
#include "canalyze/reveng.hpp"

namespace canalyze
{

namespace
{

using nlohmann::json;

struct InputOptions
{
  std::string expression;
  std::string file;
  std::string format;
  int num_vars = -1;
  bool json = false;
};

struct NamedFunction
{
  std::optional<std::string> name;
  TruthTable table;
};

std::string read_all( const std::string& path, std::istream& in )
{
  if ( path == "-" )
  {
    return std::string( std::istreambuf_iterator<char>( in ), std::istreambuf_iterator<char>() );
  }
  std::ifstream file( path );
  if ( !file )
  {
    throw std::invalid_argument( "cannot open '" + path + "'" );
  }
  return std::string( std::istreambuf_iterator<char>( file ), std::istreambuf_iterator<char>() );
}

void add_input_options( CLI::App* cmd, InputOptions& opts )
{
  auto* expr = cmd->add_option( "expression", opts.expression, "Inline function (logic format unless --format is given)" );
  auto* file = cmd->add_option( "-f,--file", opts.file, "Read one function per line from a file ('-' for stdin)" );
  expr->excludes( file );
  cmd->add_option( "--format", opts.format, "anf, logic or table" )
      ->check( CLI::IsMember( {"anf", "logic", "table"} ) );
  cmd->add_option( "-n,--n", opts.num_vars, "Variable count (default: largest index used)" )
      ->check( CLI::Range( 0, static_cast<int>( TruthTable::max_vars ) ) );
  cmd->add_flag( "--json", opts.json, "Machine-readable output" );
}

std::vector<NamedFunction> load_functions( const InputOptions& opts, std::istream& in )
{
  const auto n = opts.num_vars >= 0 ? std::optional<unsigned>( static_cast<unsigned>( opts.num_vars ) ) : std::nullopt;
  std::vector<NamedFunction> functions;
  if ( !opts.file.empty() )
  {
    if ( opts.format.empty() )
    {
      throw std::invalid_argument( "--format is required with --file" );
    }
    for ( const auto& source : split_function_lines( read_all( opts.file, in ), parse_format( opts.format ) ) )
    {
      functions.push_back( {source.name, to_truth_table( source, n )} );
    }
    if ( functions.empty() )
    {
      throw std::invalid_argument( "no functions in '" + opts.file + "'" );
    }
    return functions;
  }
  if ( opts.expression.empty() )
  {
    throw std::invalid_argument( "expected an inline expression or --file" );
  }
  const auto format = opts.format.empty() ? Format::logic : parse_format( opts.format );
  functions.push_back( {std::nullopt, to_truth_table( {std::nullopt, format, opts.expression}, n )} );
  return functions;
}

json layers_json( const std::vector<Layer>& layers )
{
  auto out = json::array();
  for ( const auto& layer : layers )
  {
    auto vars = json::array();
    for ( const auto& e : layer.entries )
    {
      vars.push_back( {{"index", e.var}, {"input", e.input ? 1 : 0}} );
    }
    out.push_back( {{"output", layer.output ? 1 : 0}, {"vars", std::move( vars )}} );
  }
  return out;
}

json decomposition_object( const LayerDecomposition& d )
{
  return {{"n", d.num_vars},
          {"depth", d.depth()},
          {"num_layers", d.layers.size()},
          {"layer_vector", d.layer_vector()},
          {"layers", layers_json( d.layers )},
          {"core", render_anf( d.core )},
          {"fictitious", d.fictitious},
          {"is_ncf", d.is_ncf()}};
}

template<typename T>
std::string joined( const std::vector<T>& values, const char* prefix = "" )
{
  std::string s;
  for ( const auto& v : values )
  {
    s += ( s.empty() ? "" : " " ) + std::string( prefix ) + std::to_string( v );
  }
  return s.empty() ? "none" : s;
}

std::vector<unsigned> parse_index_list( const std::string& text, const char* what )
{
  std::vector<unsigned> values;
  std::stringstream ss( text );
  for ( std::string item; std::getline( ss, item, ',' ); )
  {
    const auto first = item.find_first_not_of( " \tx" );
    const auto last = item.find_last_not_of( " \t" );
    if ( first == std::string::npos || item.find_first_not_of( "0123456789", first ) <= last )
    {
      throw std::invalid_argument( std::string( what ) + ": '" + item + "' is not a variable index" );
    }
    values.push_back( static_cast<unsigned>( std::stoul( item.substr( first, last - first + 1u ) ) ) );
  }
  return values;
}

std::vector<bool> parse_bit_list( const std::string& text, const char* what )
{
  std::vector<bool> bits;
  for ( const char c : text )
  {
    if ( c == '0' || c == '1' )
    {
      bits.push_back( c == '1' );
    }
    else if ( c != ',' && c != ' ' )
    {
      throw std::invalid_argument( std::string( what ) + ": expected binary digits, found '" + c + "'" );
    }
  }
  return bits;
}

/* "4-16", "4,6,8" or a mix of both */
std::vector<unsigned> parse_ns( const std::string& text )
{
  std::vector<unsigned> ns;
  std::stringstream ss( text );
  for ( std::string item; std::getline( ss, item, ',' ); )
  {
    const auto dash = item.find( '-' );
    const auto lo = parse_index_list( item.substr( 0, dash ), "--ns" ).at( 0 );
    const auto hi = dash == std::string::npos ? lo : parse_index_list( item.substr( dash + 1u ), "--ns" ).at( 0 );
    if ( hi < lo )
    {
      throw std::invalid_argument( "--ns: empty range '" + item + "'" );
    }
    for ( auto n = lo; n <= hi; ++n )
    {
      ns.push_back( n );
    }
  }
  return ns;
}

void print_header( std::ostream& out, const NamedFunction& f, std::size_t index, std::size_t total )
{
  if ( total > 1u )
  {
    out << ( index ? "\n" : "" ) << "# " << ( f.name ? *f.name : "function " + std::to_string( index + 1u ) ) << "\n";
  }
}

int cmd_analyze( const InputOptions& opts, std::istream& in, std::ostream& out )
{
  const auto functions = load_functions( opts, in );
  for ( std::size_t i = 0; i < functions.size(); ++i )
  {
    const auto d = find_layers_tt( functions[i].table );
    if ( opts.json )
    {
      out << decomposition_json( d ) << "\n";
    }
    else
    {
      print_header( out, functions[i], i, functions.size() );
      out << decomposition_text( d );
    }
  }
  return 0;
}

int cmd_dnf( const InputOptions& opts, std::istream& in, std::ostream& out )
{
  const auto functions = load_functions( opts, in );
  for ( std::size_t i = 0; i < functions.size(); ++i )
  {
    const auto d = find_layers_tt( functions[i].table );
    if ( !d.is_ncf() )
    {
      throw DomainError( "function " + ( functions[i].name ? "'" + *functions[i].name + "' " : std::string() ) +
                         "is not nested canalizing (depth " + std::to_string( d.depth() ) + " of " +
                         std::to_string( d.num_vars ) + "); no DNF is produced" );
    }
    const auto e = dnf_from_layers( d );
    if ( opts.json )
    {
      out << json{{"dnf", to_string( e )}, {"clauses", e.clauses.size()}}.dump() << "\n";
    }
    else
    {
      print_header( out, functions[i], i, functions.size() );
      out << to_string( e ) << "\n";
    }
  }
  return 0;
}

int cmd_ncf_check( const InputOptions& opts, const std::string& order, const std::string& inputs,
                   const std::string& outputs, std::istream& in, std::ostream& out )
{
  const auto functions = load_functions( opts, in );
  if ( functions.size() != 1u )
  {
    throw std::invalid_argument( "ncf-check takes exactly one function" );
  }
  const auto& f = functions.front().table;
  const auto d = find_layers_tt( f );
  if ( !d.is_ncf() )
  {
    throw DomainError( "function is not nested canalizing (depth " + std::to_string( d.depth() ) + " of " +
                       std::to_string( d.num_vars ) + ")" );
  }

  NcfOrderInfo info{parse_index_list( order, "--order" ), parse_bit_list( inputs, "--inputs" ), {}};
  const bool have_outputs = !outputs.empty();
  info.outputs = have_outputs ? parse_bit_list( outputs, "--outputs" ) : std::vector<bool>( info.order.size(), false );
  validate( info, f.num_vars() );

  const auto partition = partition_from_normalized( normalize_ncf( f, info ) );
  const auto engine = d.layer_vector();
  bool match = partition.layer_sizes == engine;
  if ( have_outputs )
  {
    match = match && ncf_from_order( info ) == f;
  }

  if ( opts.json )
  {
    out << json{{"partition", partition.layer_sizes}, {"checks", partition.checks}, {"engine", engine}, {"match", match}}
               .dump()
        << "\n";
  }
  else
  {
    out << "partition: " << joined( partition.layer_sizes ) << "\n"
        << "checks: " << partition.checks << "\n"
        << "engine: " << joined( engine ) << "\n"
        << "match: " << ( match ? "yes" : "no" ) << "\n";
  }
  return 0;
}

int cmd_enumerate( const std::string& path, bool as_json, std::istream& in, std::ostream& out )
{
  const auto spec = parse_structure_spec( read_all( path, in ) );
  const auto found = enumerate_ncfs( spec );
  if ( as_json )
  {
    auto list = json::array();
    for ( const auto& e : found )
    {
      json layers = json::array();
      for ( const auto& layer : e.resolved.layers )
      {
        auto vars = json::array();
        for ( const auto& m : layer.members )
        {
          vars.push_back( {{"index", m.var}, {"input", *m.input ? 1 : 0}} );
        }
        layers.push_back( {{"output", *layer.output ? 1 : 0}, {"vars", std::move( vars )}} );
      }
      list.push_back( {{"anf", render_anf( e.polynomial )}, {"table", e.table.to_string()}, {"layers", layers}} );
    }
    out << list.dump() << "\n";
    return 0;
  }
  out << found.size() << ( found.size() == 1u ? " function\n" : " functions\n" );
  for ( const auto& e : found )
  {
    out << "\n" << render_anf( e.polynomial ) << "\n";
    std::istringstream structure( render_structure_spec( e.resolved ) );
    for ( std::string line; std::getline( structure, line ); )
    {
      out << "  " << line << "\n";
    }
  }
  return 0;
}

int cmd_generate( const std::string& cls, unsigned n, unsigned count, uint64_t seed, std::ostream& out )
{
  for ( auto i = 0u; i < count; ++i )
  {
    const auto s = mix_seed( seed, i );
    out << ( cls == "ncf" ? random_ncf( n, s ) : random_noncanalizing( n, s ) ).to_string() << "\n";
  }
  return 0;
}

int cmd_bench( const std::string& ns_text, unsigned trials, uint64_t seed, const std::string& path, std::ostream& out )
{
  const auto ns = parse_ns( ns_text );
  const auto records = run_benchmark( ns, trials, seed );
  if ( path == "-" )
  {
    write_csv( out, records );
    return 0;
  }
  std::ofstream file( path );
  if ( !file )
  {
    throw std::invalid_argument( "cannot write '" + path + "'" );
  }
  write_csv( file, records );
  return 0;
}

} // namespace

std::string decomposition_json( const LayerDecomposition& d )
{
  return decomposition_object( d ).dump();
}

std::string decomposition_text( const LayerDecomposition& d )
{
  std::ostringstream os;
  os << "n: " << d.num_vars << "\n"
     << "depth: " << d.depth() << "\n"
     << "num_layers: " << d.layers.size() << "\n"
     << "layer_vector: " << joined( d.layer_vector() ) << "\n";
  for ( std::size_t i = 0; i < d.layers.size(); ++i )
  {
    os << "layer " << i + 1u << ": output=" << d.layers[i].output;
    for ( const auto& e : d.layers[i].entries )
    {
      os << " x" << e.var << "=" << e.input;
    }
    os << "\n";
  }
  os << "core: " << render_anf( d.core ) << "\n"
     << "fictitious: " << joined( d.fictitious, "x" ) << "\n"
     << "is_ncf: " << ( d.is_ncf() ? "yes" : "no" ) << "\n";
  return os.str();
}

int run_cli( int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err )
{
  CLI::App app{"Canalizing layer analysis of Boolean functions", "canalyze"};
  app.require_subcommand( 1 );

  InputOptions analyze_opts, dnf_opts, check_opts;
  auto* analyze = app.add_subcommand( "analyze", "Canalizing layers, core and fictitious variables" );
  add_input_options( analyze, analyze_opts );

  auto* dnf = app.add_subcommand( "dnf", "Disjunctive normal form of a nested canalizing function" );
  add_input_options( dnf, dnf_opts );

  std::string order, inputs, outputs;
  auto* check = app.add_subcommand( "ncf-check", "Layer partition from a known canalizing order" );
  add_input_options( check, check_opts );
  check->add_option( "--order", order, "Canalizing order as variable indices, e.g. 3,1,2" )->required();
  check->add_option( "--inputs", inputs, "Canalizing inputs in order, e.g. 1,0,1" )->required();
  check->add_option( "--outputs", outputs, "Canalized outputs in order (optional, checked when given)" );

  std::string spec_path;
  bool enumerate_json = false;
  auto* enumerate = app.add_subcommand( "enumerate", "All NCFs with a prescribed layer structure" );
  enumerate->add_option( "spec", spec_path, "Structure file ('-' for stdin)" )->required();
  enumerate->add_flag( "--json", enumerate_json, "Machine-readable output" );

  std::string cls = "ncf";
  unsigned gen_n = 0u, count = 1u;
  uint64_t gen_seed = 1u;
  auto* generate = app.add_subcommand( "generate", "Random truth tables" );
  generate->add_option( "--class", cls, "ncf or noncanalizing" )
      ->check( CLI::IsMember( {"ncf", "noncanalizing"} ) )
      ->capture_default_str();
  generate->add_option( "-n,--n", gen_n, "Variable count" )->required();
  generate->add_option( "--count", count, "Number of functions" )->capture_default_str();
  generate->add_option( "--seed", gen_seed, "Random seed" )->capture_default_str();

  std::string ns = "4-16", bench_out = "-";
  unsigned trials = 5u;
  uint64_t bench_seed = 1u;
  auto* bench = app.add_subcommand( "bench", "Time the layering algorithms and write CSV" );
  bench->add_option( "--ns", ns, "Variable counts, e.g. 4-16 or 4,8,12" )->capture_default_str();
  bench->add_option( "--trials", trials, "Inputs per variable count and class" )->capture_default_str();
  bench->add_option( "--seed", bench_seed, "Random seed" )->capture_default_str();
  bench->add_option( "-o,--out", bench_out, "CSV destination ('-' for stdout)" )->capture_default_str();

  try
  {
    app.parse( argc, argv );
  }
  catch ( const CLI::ParseError& e )
  {
    return app.exit( e, out, err ) == 0 ? 0 : 1;
  }

  try
  {
    if ( analyze->parsed() )
    {
      return cmd_analyze( analyze_opts, in, out );
    }
    if ( dnf->parsed() )
    {
      return cmd_dnf( dnf_opts, in, out );
    }
    if ( check->parsed() )
    {
      return cmd_ncf_check( check_opts, order, inputs, outputs, in, out );
    }
    if ( enumerate->parsed() )
    {
      return cmd_enumerate( spec_path, enumerate_json, in, out );
    }
    if ( generate->parsed() )
    {
      return cmd_generate( cls, gen_n, count, gen_seed, out );
    }
    return cmd_bench( ns, trials, bench_seed, bench_out, out );
  }
  catch ( const DomainError& e )
  {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  catch ( const std::exception& e )
  {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

} // namespace canalyze
