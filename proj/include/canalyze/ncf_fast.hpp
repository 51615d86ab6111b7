/*!
  \file ncf_fast.hpp
  \brief Layer partition of a nested canalizing function with a known variable order

  Once the canalizing order and inputs of an NCF are known, the layer
  boundaries follow from n - 1 equalities between ANF coefficients of the
  normalized function h(y) = f(x + a) + f(a), with the variables renamed so
  that y_k stands for the k-th variable of the order.  Normalized, every
  variable canalizes at input 0, h(0) = 0, and `y_j`, `y_{j+1}` share a layer
  iff c_{1..j} = c_{1..j+1} * c_{[n] \ {1..j+1}}.
*/

#pragma once

#include <cstddef>
#include <vector>

#include "canalyze/anf.hpp"
#include "canalyze/layers.hpp"
#include "canalyze/truth_table.hpp"

namespace canalyze
{

/*! \brief Canalizing order (permutation of 1..n), inputs and outputs, indexed by order position */
struct NcfOrderInfo
{
  std::vector<unsigned> order;
  std::vector<bool> inputs;
  std::vector<bool> outputs;

  std::size_t size() const noexcept { return order.size(); }

  friend bool operator==( const NcfOrderInfo&, const NcfOrderInfo& ) = default;
};

/*! \brief Throws std::invalid_argument on length mismatches or a non-permutation order */
void validate( const NcfOrderInfo& info, unsigned num_vars );

/*! \brief The nested canalizing function with the given order, inputs and outputs

  Falls through to the negation of the last output when no variable takes
  its canalizing input.
*/
TruthTable ncf_from_order( const NcfOrderInfo& info );

/*! \brief Order information read off a nested canalizing decomposition, layer by layer */
NcfOrderInfo order_info_from_decomposition( const LayerDecomposition& d );

/*! \brief ANF of h(y) = f(x + a) + f(a) with y_k = x_{order[k]} + a_k */
AnfPolynomial normalize_ncf( const TruthTable& f, const NcfOrderInfo& info );

struct FastPartition
{
  std::vector<unsigned> layer_sizes;
  std::size_t checks = 0u; ///< coefficient equalities evaluated
};

/*! \brief Layer sizes from a normalized polynomial by exactly n - 1 coefficient checks */
FastPartition partition_from_normalized( const AnfPolynomial& h );

/*! \brief Normalizes, partitions, and confirms the result against find_layers_tt

  Throws DomainError if the partition disagrees with the layer structure,
  which means `info` does not describe `f`.
*/
FastPartition fast_layer_partition( const TruthTable& f, const NcfOrderInfo& info );

} // namespace canalyze
