/*!
  \file layers.hpp
  \brief Canalizing layer decomposition of Boolean functions

  Every Boolean function has a unique standard monomial form

      f = M_1 ( M_2 ( ... ( M_r * p + 1 ) ... ) + 1 ) + b,   M_i = prod_j ( x_ij + a_ij ),

  where the variables of `M_i` form the i-th canalizing layer: setting any of
  them to its canalizing input `a_ij` (while all earlier layers sit at their
  non-canalizing inputs) forces `f` to the layer's canalized output.  Outputs
  alternate from layer to layer and the first one is `b`.
*/

#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "canalyze/anf.hpp"
#include "canalyze/truth_table.hpp"

namespace canalyze
{

struct LayerEntry
{
  unsigned var;
  bool input; ///< canalizing input

  friend bool operator==( const LayerEntry&, const LayerEntry& ) = default;
};

struct Layer
{
  std::vector<LayerEntry> entries; ///< sorted by variable index
  bool output;                     ///< canalized output

  friend bool operator==( const Layer&, const Layer& ) = default;
};

/*! \brief Layers plus core of a Boolean function

  `core` is the residual function on the variables that never become
  canalizing, i.e. `f` with every layer variable held at its non-canalizing
  input, written with the original variable indices.  For a function whose
  variables are all canalizing the residual is the constant opposite to the
  last layer's output.  The polynomial `p` of the standard form differs from
  the residual by the last layer's output; see `standard_core()`.

  Variables on which `f` does not depend are listed in `fictitious`.
*/
struct LayerDecomposition
{
  unsigned num_vars = 0u;
  std::vector<Layer> layers;
  AnfPolynomial core;
  std::vector<unsigned> fictitious;

  /*! \brief Constant term `b`: output of the first layer, 0 without layers */
  bool b() const noexcept { return !layers.empty() && layers.front().output; }

  /*! \brief Canalizing depth `k = k_1 + ... + k_r` */
  unsigned depth() const noexcept;

  /*! \brief Layer structure `(k_1, ..., k_r)` */
  std::vector<unsigned> layer_vector() const;

  /*! \brief Nested canalizing: every variable lies in some layer */
  bool is_ncf() const noexcept { return num_vars > 0u && depth() == num_vars; }

  /*! \brief Core polynomial `p` of the standard monomial form (1 for nested canalizing functions) */
  AnfPolynomial standard_core() const;

  friend bool operator==( const LayerDecomposition&, const LayerDecomposition& ) = default;
};

/*! \brief Throws std::invalid_argument unless the structural invariants hold

  Checks non-empty sorted layers, alternating outputs, that layer variables,
  core variables and fictitious variables partition {1, ..., n}, and that a
  constant residual after at least one layer differs from the last output.
*/
void validate( const LayerDecomposition& d );

/*! \brief Column masks `t_i` of the input matrix T_m, for every m up to a bound

  Column `t_i` of `T_m` depends only on the row-index bit `m - i`, so every
  `T_m` is stored as prefixes of per-bit masks of the largest table.
  Immutable after construction.
*/
class ColumnMaskCache
{
public:
  explicit ColumnMaskCache( unsigned max_vars );

  unsigned max_vars() const noexcept { return max_vars_; }

  /*! \brief Words of `t_var` for tables over `num_vars` variables (padding not masked) */
  std::span<const uint64_t> column( unsigned num_vars, unsigned var ) const;

private:
  unsigned max_vars_;
  std::vector<std::vector<uint64_t>> by_position_;
};

/*! \brief The four dot products of the truth-table criteria, one entry per variable */
struct DotProducts
{
  std::vector<uint64_t> ones_with_one;   ///< <f, t_i>
  std::vector<uint64_t> ones_with_zero;  ///< <f, 1 - t_i>
  std::vector<uint64_t> zeros_with_one;  ///< <1 - f, t_i>
  std::vector<uint64_t> zeros_with_zero; ///< <1 - f, 1 - t_i>
};

DotProducts canalizing_dot_products( const TruthTable& f );

/*! \brief Index sets I_{a->b}: variables whose input `a` forces output `b` */
struct CanalizingSets
{
  std::vector<unsigned> in0_out0;
  std::vector<unsigned> in1_out0;
  std::vector<unsigned> in0_out1;
  std::vector<unsigned> in1_out1;

  friend bool operator==( const CanalizingSets&, const CanalizingSets& ) = default;
};

/*! \brief Canalizing variables of a non-constant function

  Throws std::invalid_argument for constant functions, which are not canalizing.
*/
CanalizingSets canalizing_sets( const TruthTable& f );

/*! \brief Layers from the truth table using the dot-product criteria

  Without a cache, the column masks of the input matrix are rebuilt row by
  row on every round; with a cache (covering at least `f.num_vars()`
  variables) they are looked up.
*/
LayerDecomposition find_layers_tt( const TruthTable& f, const ColumnMaskCache* masks = nullptr );

/*! \brief Layers from the polynomial by successive symbolic substitution */
LayerDecomposition find_layers_anf( const AnfPolynomial& p );

/*! \brief Layers by literal row scans of the canalization definition

  Independent reference used for cross-validation; rejects n > 12.
*/
LayerDecomposition find_layers_oracle( const TruthTable& f );

/*! \brief Truth table of the standard monomial form; validates `d` first */
TruthTable reconstruct( const LayerDecomposition& d );

/*! \brief Decomposition of the complement `f + 1`

  Flips every layer output and the residual.  A single-variable layer over a
  constant core is re-expressed with the opposite canalizing input so that
  the result stays in canonical form (`b = 0` in that case).
*/
LayerDecomposition negate_decomposition( const LayerDecomposition& d );

} // namespace canalyze
