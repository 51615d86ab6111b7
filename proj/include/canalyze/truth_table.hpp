/*!
  \file truth_table.hpp
  \brief Packed truth tables of Boolean functions

  Row `r` of a table over `n` variables encodes the assignment in which
  variable `x_j` (1-based) takes the value of bit `n - j` of `r`, so `x_1` is
  the most significant input and `x_n` the least significant.  For `n = 3` the
  rows are 000, 001, ..., 111 read as `(x_1, x_2, x_3)`.
*/

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace canalyze
{

/*! \brief Truth table of a Boolean function over `num_vars()` variables

  Bits are stored 64 rows per word; when the table has fewer than 64 rows the
  unused high bits of the single word are always zero.
*/
class TruthTable
{
public:
  static constexpr unsigned max_vars = 24u;

  TruthTable() : TruthTable( 0u ) {}

  /*! \brief Constant-zero table; throws std::invalid_argument for n > max_vars */
  explicit TruthTable( unsigned num_vars );

  static TruthTable constant( unsigned num_vars, bool value );

  /*! \brief The projection `x_var` (1-based) */
  static TruthTable projection( unsigned num_vars, unsigned var );

  unsigned num_vars() const noexcept { return num_vars_; }
  uint64_t num_rows() const noexcept { return uint64_t( 1 ) << num_vars_; }

  bool get( uint64_t row ) const noexcept
  {
    return ( words_[row >> 6] >> ( row & 63u ) ) & 1u;
  }

  void set( uint64_t row, bool value ) noexcept
  {
    const auto bit = uint64_t( 1 ) << ( row & 63u );
    if ( value )
    {
      words_[row >> 6] |= bit;
    }
    else
    {
      words_[row >> 6] &= ~bit;
    }
  }

  std::span<const uint64_t> words() const noexcept { return words_; }

  /*! \brief Mutable word access; callers must keep the padding bits zero */
  std::span<uint64_t> words() noexcept { return words_; }

  uint64_t count_ones() const noexcept;

  /*! \brief The value of a constant function, or nullopt */
  std::optional<bool> constant_value() const noexcept;
  bool is_constant() const noexcept { return constant_value().has_value(); }

  /*! \brief Mask of valid bits in the last word */
  uint64_t last_word_mask() const noexcept;

  /*! \brief Rows as a '0'/'1' string, row 0 first */
  std::string to_string() const;

  TruthTable operator~() const;
  TruthTable operator&( const TruthTable& other ) const;
  TruthTable operator|( const TruthTable& other ) const;
  TruthTable operator^( const TruthTable& other ) const;

  friend bool operator==( const TruthTable&, const TruthTable& ) = default;

private:
  unsigned num_vars_;
  std::vector<uint64_t> words_;
};

/*! \brief Value of variable `var` (1-based) in row `row` of an n-variable table */
inline bool row_value( uint64_t row, unsigned num_vars, unsigned var ) noexcept
{
  return ( row >> ( num_vars - var ) ) & 1u;
}

/*! \brief Number of 64-bit words used by a table over `num_vars` variables */
inline std::size_t num_words( unsigned num_vars ) noexcept
{
  return num_vars <= 6u ? 1u : std::size_t( 1 ) << ( num_vars - 6u );
}

/*! \brief Bits of a single word in which row-index bit `position` is set (position < 6) */
uint64_t position_pattern( unsigned position ) noexcept;

/*! \brief The subfunction f|_{x_var = value}

  The result has `num_vars() - 1` variables; variables after `var` shift down
  by one index.  Throws std::invalid_argument if `var` is out of range.
*/
TruthTable restrict( const TruthTable& f, unsigned var, bool value );

/*! \brief Variables (1-based, ascending) on which f actually depends */
std::vector<unsigned> essential_vars( const TruthTable& f );

/*! \brief Lexicographic comparison of the row sequences (row 0 first) */
bool lexicographic_less( const TruthTable& a, const TruthTable& b );

} // namespace canalyze
