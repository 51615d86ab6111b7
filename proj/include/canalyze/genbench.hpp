/*!
  \file genbench.hpp
  \brief Random benchmark inputs and the layering timing harness
*/

#pragma once

#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "canalyze/ncf_fast.hpp"
#include "canalyze/truth_table.hpp"

namespace canalyze
{

/*! \brief splitmix64 step, used to derive independent per-input seeds */
uint64_t mix_seed( uint64_t seed, uint64_t salt ) noexcept;

/*! \brief Uniform order, inputs and outputs for an n-variable NCF

  The last input/output pair is normalized so the last two variables share
  a layer (flipping both describes the same function), which makes the
  result directly usable with fast_layer_partition.
*/
NcfOrderInfo random_ncf_order( unsigned n, uint64_t seed );

/*! \brief A random nested canalizing function; throws std::invalid_argument unless 1 <= n <= 24 */
TruthTable random_ncf( unsigned n, uint64_t seed );

struct NonCanalizingSample
{
  TruthTable table;
  std::size_t draws; ///< uniform tables drawn, including the accepted one
};

/*! \brief Uniform truth tables redrawn until non-constant and non-canalizing; requires 4 <= n <= 24 */
NonCanalizingSample sample_noncanalizing( unsigned n, uint64_t seed );

inline TruthTable random_noncanalizing( unsigned n, uint64_t seed )
{
  return sample_noncanalizing( n, seed ).table;
}

enum class FunctionClass
{
  ncf,
  noncanalizing
};

const char* to_string( FunctionClass c ) noexcept;

struct BenchRecord
{
  std::string algorithm; ///< "tt" (truth table) or "anf" (polynomial)
  FunctionClass function_class;
  unsigned num_vars;
  bool precompute;
  std::vector<double> seconds; ///< one entry per trial

  std::size_t trials() const noexcept { return seconds.size(); }
  double mean() const;
  double median() const;
};

/*! \brief Times the truth-table algorithm with and without precomputed columns, and the polynomial algorithm

  For every n and function class, `trials` inputs are generated from `seed`
  and shared by the three algorithms.  Only the layering call is timed;
  conversions to the polynomial and column precomputation happen beforehand.
*/
std::vector<BenchRecord> run_benchmark( std::span<const unsigned> ns, unsigned trials, uint64_t seed );

/*! \brief CSV with header `algorithm,class,n,precompute,trial,seconds`

  One row per trial, followed for each record by a summary row with
  trial = -1 holding the mean.
*/
void write_csv( std::ostream& os, std::span<const BenchRecord> records );

} // namespace canalyze
