/*!
  \file reveng.hpp
  \brief Nested canalizing functions with a prescribed canalizing structure

  A structure fixes which variables form each layer and may leave canalizing
  inputs and layer outputs open.  Since the standard monomial form determines
  the function uniquely, the matching functions are found by completing the
  open fields, building each completion and keeping those whose canonical
  re-analysis reproduces every prescribed field.
*/

#pragma once

#include <optional>
#include <vector>

#include "canalyze/anf.hpp"
#include "canalyze/truth_table.hpp"

namespace canalyze
{

struct SpecMember
{
  unsigned var;
  std::optional<bool> input; ///< nullopt: unknown

  friend bool operator==( const SpecMember&, const SpecMember& ) = default;
};

struct SpecLayer
{
  std::vector<SpecMember> members;
  std::optional<bool> output; ///< nullopt: unknown

  friend bool operator==( const SpecLayer&, const SpecLayer& ) = default;
};

struct StructureSpec
{
  unsigned num_vars = 0u;
  std::vector<SpecLayer> layers;

  friend bool operator==( const StructureSpec&, const StructureSpec& ) = default;
};

/*! \brief Throws std::invalid_argument unless the layers partition {1, ..., n} */
void validate( const StructureSpec& spec );

/*! \brief Whether x_var canalizes p at input `input`, by the factoring test

  For input 0, p + p(0) must be divisible by x_var; for input 1 the same test
  applies to p(..., x_var + 1, ...) minus its constant term.  A constant
  polynomial has no canalizing variables.
*/
bool first_layer_check( const AnfPolynomial& p, unsigned var, bool input );

struct EnumeratedNcf
{
  AnfPolynomial polynomial;
  TruthTable table;
  StructureSpec resolved; ///< the prescribed structure with every open field filled in

  friend bool operator==( const EnumeratedNcf&, const EnumeratedNcf& ) = default;
};

/*! \brief All NCFs matching the structure, ordered lexicographically by truth table

  Throws std::invalid_argument for malformed structures, for more than 12
  variables, and when prescribed outputs contradict the alternation of
  outputs between adjacent layers.
*/
std::vector<EnumeratedNcf> enumerate_ncfs( const StructureSpec& spec );

/*! \brief Whether f is nested canalizing with the prescribed structure */
bool spec_match( const TruthTable& f, const StructureSpec& spec );

} // namespace canalyze
