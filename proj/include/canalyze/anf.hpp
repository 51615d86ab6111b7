/*!
  \file anf.hpp
  \brief Algebraic normal form (polynomials over GF(2))
*/

#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "canalyze/truth_table.hpp"

namespace canalyze
{

/*! \brief Square-free monomial; bit `i - 1` is set iff `x_i` occurs.  Zero is the constant 1. */
using Monomial = uint32_t;

inline Monomial monomial_of( std::initializer_list<unsigned> vars )
{
  Monomial m = 0;
  for ( auto v : vars )
  {
    m |= Monomial( 1 ) << ( v - 1u );
  }
  return m;
}

inline bool contains_var( Monomial m, unsigned var ) noexcept
{
  return ( m >> ( var - 1u ) ) & 1u;
}

/*! \brief Sparse ANF: the set of monomials with coefficient 1

  Monomials are kept sorted by their bit mask without duplicates, so two
  polynomials are equal iff they denote the same function.
*/
class AnfPolynomial
{
public:
  AnfPolynomial() = default;
  explicit AnfPolynomial( unsigned num_vars ) : num_vars_( num_vars ) {}

  /*! \brief Builds a polynomial; repeated monomials cancel in pairs

    Throws std::invalid_argument if a monomial mentions a variable above `num_vars`.
  */
  AnfPolynomial( unsigned num_vars, std::vector<Monomial> monomials );

  /*! \brief Adopts monomials that are already strictly increasing and in range; not checked */
  static AnfPolynomial from_sorted( unsigned num_vars, std::vector<Monomial> monomials );

  static AnfPolynomial constant( unsigned num_vars, bool value );

  unsigned num_vars() const noexcept { return num_vars_; }
  std::span<const Monomial> monomials() const noexcept { return monomials_; }
  std::size_t size() const noexcept { return monomials_.size(); }
  bool is_zero() const noexcept { return monomials_.empty(); }

  bool coefficient( Monomial m ) const noexcept;
  bool constant_term() const noexcept { return coefficient( 0u ); }

  /*! \brief Union of all monomials */
  Monomial support() const noexcept;
  bool is_constant() const noexcept { return support() == 0u; }

  /*! \brief Value at the assignment with `x_i = 1` iff bit `i - 1` of `point` is set */
  bool evaluate( Monomial point ) const noexcept;

  /*! \brief Substitutes the constant `value` for `x_var` */
  AnfPolynomial substitute( unsigned var, bool value ) const;

  /*! \brief Whether substituting `value` for `x_var` leaves a constant, without building it */
  bool constant_after_substitution( unsigned var, bool value ) const;

  /*! \brief The polynomial f(x_1, ..., x_var + 1, ..., x_n) */
  AnfPolynomial shift( unsigned var ) const;

  /*! \brief Same polynomial over a different number of variables */
  AnfPolynomial with_num_vars( unsigned num_vars ) const;

  AnfPolynomial operator+( const AnfPolynomial& other ) const;
  AnfPolynomial operator+( bool constant ) const;

  friend bool operator==( const AnfPolynomial&, const AnfPolynomial& ) = default;

private:
  unsigned num_vars_ = 0u;
  std::vector<Monomial> monomials_;
};

/*! \brief ANF of a truth table via the binary Moebius transform */
AnfPolynomial anf_from_tt( const TruthTable& f );

/*! \brief Truth table of a polynomial (inverse of anf_from_tt) */
TruthTable tt_from_anf( const AnfPolynomial& p );

/*! \brief Converts between row indices and monomial masks for n variables */
Monomial row_to_monomial( uint64_t row, unsigned num_vars ) noexcept;
uint64_t monomial_to_row( Monomial m, unsigned num_vars ) noexcept;

} // namespace canalyze
