#include "canalyze/genbench.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

#include "canalyze/anf.hpp"
#include "canalyze/layers.hpp"

namespace canalyze
{

namespace
{

/* uniform in [0, bound) without the modulo bias; the distribution classes are not portable */
uint64_t uniform_below( std::mt19937_64& rng, uint64_t bound )
{
  const uint64_t threshold = ( 0u - bound ) % bound;
  while ( true )
  {
    const auto x = rng();
    if ( x >= threshold )
    {
      return x % bound;
    }
  }
}

void check_range( unsigned n, unsigned lowest, const char* what )
{
  if ( n < lowest || n > TruthTable::max_vars )
  {
    throw std::invalid_argument( std::string( what ) + ": n must lie in [" + std::to_string( lowest ) + ", " +
                                 std::to_string( TruthTable::max_vars ) + "], got " + std::to_string( n ) );
  }
}

} // namespace

uint64_t mix_seed( uint64_t seed, uint64_t salt ) noexcept
{
  uint64_t z = seed + 0x9e3779b97f4a7c15ull * ( salt + 1u );
  z = ( z ^ ( z >> 30u ) ) * 0xbf58476d1ce4e5b9ull;
  z = ( z ^ ( z >> 27u ) ) * 0x94d049bb133111ebull;
  return z ^ ( z >> 31u );
}

NcfOrderInfo random_ncf_order( unsigned n, uint64_t seed )
{
  check_range( n, 1u, "random_ncf" );
  std::mt19937_64 rng( seed );

  NcfOrderInfo info;
  info.order.resize( n );
  std::iota( info.order.begin(), info.order.end(), 1u );
  for ( auto i = n; i > 1u; --i )
  {
    std::swap( info.order[i - 1u], info.order[uniform_below( rng, i )] );
  }
  for ( auto i = 0u; i < n; ++i )
  {
    info.inputs.push_back( rng() & 1u );
  }
  for ( auto i = 0u; i < n; ++i )
  {
    info.outputs.push_back( rng() & 1u );
  }

  if ( n >= 2u && info.outputs[n - 1u] != info.outputs[n - 2u] )
  {
    info.inputs[n - 1u] = !info.inputs[n - 1u];
    info.outputs[n - 1u] = !info.outputs[n - 1u];
  }
  return info;
}

TruthTable random_ncf( unsigned n, uint64_t seed )
{
  return ncf_from_order( random_ncf_order( n, seed ) );
}

NonCanalizingSample sample_noncanalizing( unsigned n, uint64_t seed )
{
  check_range( n, 4u, "random_noncanalizing" );
  std::mt19937_64 rng( seed );
  NonCanalizingSample sample{TruthTable( n ), 0u};
  while ( true )
  {
    ++sample.draws;
    auto words = sample.table.words();
    for ( auto& w : words )
    {
      w = rng();
    }
    words.back() &= sample.table.last_word_mask();
    if ( !sample.table.is_constant() && find_layers_tt( sample.table ).layers.empty() )
    {
      return sample;
    }
  }
}

const char* to_string( FunctionClass c ) noexcept
{
  return c == FunctionClass::ncf ? "ncf" : "noncanalizing";
}

double BenchRecord::mean() const
{
  if ( seconds.empty() )
  {
    return 0.0;
  }
  return std::accumulate( seconds.begin(), seconds.end(), 0.0 ) / static_cast<double>( seconds.size() );
}

double BenchRecord::median() const
{
  if ( seconds.empty() )
  {
    return 0.0;
  }
  auto sorted = seconds;
  std::sort( sorted.begin(), sorted.end() );
  const auto mid = sorted.size() / 2u;
  return sorted.size() % 2u ? sorted[mid] : 0.5 * ( sorted[mid - 1u] + sorted[mid] );
}

std::vector<BenchRecord> run_benchmark( std::span<const unsigned> ns, unsigned trials, uint64_t seed )
{
  if ( trials == 0u )
  {
    throw std::invalid_argument( "run_benchmark: at least one trial required" );
  }

  using clock = std::chrono::steady_clock;
  volatile unsigned sink = 0u;
  auto time = [&sink]( auto&& call ) {
    const auto start = clock::now();
    const auto d = call();
    const auto stop = clock::now();
    sink = sink + d.depth();
    return std::chrono::duration<double>( stop - start ).count();
  };

  std::vector<BenchRecord> records;
  for ( const auto n : ns )
  {
    const ColumnMaskCache masks( n );
    for ( const auto cls : {FunctionClass::noncanalizing, FunctionClass::ncf} )
    {
      std::vector<TruthTable> tables;
      std::vector<AnfPolynomial> polynomials;
      for ( auto t = 0u; t < trials; ++t )
      {
        const auto input_seed = mix_seed( mix_seed( mix_seed( seed, n ), static_cast<uint64_t>( cls ) ), t );
        tables.push_back( cls == FunctionClass::ncf ? random_ncf( n, input_seed ) : random_noncanalizing( n, input_seed ) );
        polynomials.push_back( anf_from_tt( tables.back() ) );
      }

      BenchRecord plain{"tt", cls, n, false, {}};
      BenchRecord cached{"tt", cls, n, true, {}};
      BenchRecord poly{"anf", cls, n, false, {}};
      for ( auto t = 0u; t < trials; ++t )
      {
        plain.seconds.push_back( time( [&] { return find_layers_tt( tables[t] ); } ) );
      }
      for ( auto t = 0u; t < trials; ++t )
      {
        cached.seconds.push_back( time( [&] { return find_layers_tt( tables[t], &masks ); } ) );
      }
      for ( auto t = 0u; t < trials; ++t )
      {
        poly.seconds.push_back( time( [&] { return find_layers_anf( polynomials[t] ); } ) );
      }
      records.push_back( std::move( plain ) );
      records.push_back( std::move( cached ) );
      records.push_back( std::move( poly ) );
    }
  }
  return records;
}

void write_csv( std::ostream& os, std::span<const BenchRecord> records )
{
  os << "algorithm,class,n,precompute,trial,seconds\n";
  const auto old_precision = os.precision( 9 );
  auto row = [&os]( const BenchRecord& r, long trial, double seconds ) {
    os << r.algorithm << ',' << to_string( r.function_class ) << ',' << r.num_vars << ',' << ( r.precompute ? 1 : 0 )
       << ',' << trial << ',' << seconds << '\n';
  };
  for ( const auto& r : records )
  {
    for ( std::size_t t = 0; t < r.seconds.size(); ++t )
    {
      row( r, static_cast<long>( t ), r.seconds[t] );
    }
    row( r, -1, r.mean() );
  }
  os.precision( old_precision );
}

} // namespace canalyze
