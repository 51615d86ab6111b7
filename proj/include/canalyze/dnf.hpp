/*!
  \file dnf.hpp
  \brief Disjunctive normal forms of nested canalizing functions

  Write the layers of an NCF as conjunctions M_i (all variables of layer i
  avoid their canalizing inputs) and let !M_i be the disjunction of the
  opposite literals.  With G_r = M_r and G_i = M_i & !G_{i+1}, f = G_1 + b, so

    b = 0:  f = OR_i ( M_1 & M_3 & ... & M_{2i+1} & !M_{2i+2} )
    b = 1:  f = OR_i ( M_2 & M_4 & ... & M_{2i}   & !M_{2i+1} )

  where a negated monomial past the last layer is the constant 1.  Each term
  holds at most one disjunction, which is distributed over the conjunctions.
*/

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "canalyze/layers.hpp"
#include "canalyze/truth_table.hpp"

namespace canalyze
{

struct Literal
{
  unsigned var;
  bool positive;

  friend bool operator==( const Literal&, const Literal& ) = default;
};

using Clause = std::vector<Literal>;

/*! \brief Disjunction of clauses; no clauses is 0, one empty clause is 1 */
struct DnfExpression
{
  std::vector<Clause> clauses;

  bool evaluate( uint64_t row, unsigned num_vars ) const;

  friend bool operator==( const DnfExpression&, const DnfExpression& ) = default;
};

/*! \brief Flat DNF of a nested canalizing function; throws DomainError otherwise */
DnfExpression dnf_from_layers( const LayerDecomposition& d );

/*! \brief Number of clauses `dnf_from_layers` produces, from the layer sizes alone */
std::size_t dnf_clause_count( const LayerDecomposition& d );

/*! \brief The undistributed form, e.g. "(!x1 & !x3) & (!x2 | x4)" */
std::string dnf_compact_string( const LayerDecomposition& d );

/*! \brief Whether `e` agrees with `f` on every row */
bool verify_dnf( const DnfExpression& e, const TruthTable& f );

/*! \brief "!x1 & !x3 & x4 | x2"; "0" and "1" for the constants */
std::string to_string( const DnfExpression& e );

} // namespace canalyze
