#include "canalyze/anf.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace canalyze
{

namespace
{

/* sorts and cancels equal monomials in pairs */
void normalize( std::vector<Monomial>& ms )
{
  std::sort( ms.begin(), ms.end() );
  std::size_t out = 0;
  for ( std::size_t i = 0; i < ms.size(); )
  {
    auto j = i;
    while ( j < ms.size() && ms[j] == ms[i] )
    {
      ++j;
    }
    if ( ( j - i ) & 1u )
    {
      ms[out++] = ms[i];
    }
    i = j;
  }
  ms.resize( out );
}

/* in-place binary Moebius (equivalently zeta) transform over GF(2) */
void moebius_in_place( TruthTable& tt )
{
  auto words = tt.words();
  const auto n = tt.num_vars();
  for ( auto p = 0u; p < n; ++p )
  {
    if ( p < 6u )
    {
      const auto low = ~position_pattern( p );
      const auto step = 1u << p;
      for ( auto& w : words )
      {
        w ^= ( w & low ) << step;
      }
    }
    else
    {
      const auto stride = std::size_t( 1 ) << ( p - 6u );
      for ( std::size_t i = 0; i < words.size(); ++i )
      {
        if ( i & stride )
        {
          words[i] ^= words[i ^ stride];
        }
      }
    }
  }
}

} // namespace

AnfPolynomial::AnfPolynomial( unsigned num_vars, std::vector<Monomial> monomials )
    : num_vars_( num_vars ), monomials_( std::move( monomials ) )
{
  const Monomial allowed = num_vars >= 32u ? ~Monomial( 0 ) : ( Monomial( 1 ) << num_vars ) - 1u;
  for ( auto m : monomials_ )
  {
    if ( m & ~allowed )
    {
      throw std::invalid_argument( "monomial mentions a variable above x" + std::to_string( num_vars ) );
    }
  }
  normalize( monomials_ );
}

AnfPolynomial AnfPolynomial::from_sorted( unsigned num_vars, std::vector<Monomial> monomials )
{
  AnfPolynomial p( num_vars );
  p.monomials_ = std::move( monomials );
  return p;
}

AnfPolynomial AnfPolynomial::constant( unsigned num_vars, bool value )
{
  AnfPolynomial p( num_vars );
  if ( value )
  {
    p.monomials_.push_back( 0u );
  }
  return p;
}

bool AnfPolynomial::coefficient( Monomial m ) const noexcept
{
  return std::binary_search( monomials_.begin(), monomials_.end(), m );
}

Monomial AnfPolynomial::support() const noexcept
{
  Monomial s = 0;
  for ( auto m : monomials_ )
  {
    s |= m;
  }
  return s;
}

bool AnfPolynomial::evaluate( Monomial point ) const noexcept
{
  bool value = false;
  for ( auto m : monomials_ )
  {
    value ^= ( m & point ) == m;
  }
  return value;
}

AnfPolynomial AnfPolynomial::substitute( unsigned var, bool value ) const
{
  const Monomial bit = Monomial( 1 ) << ( var - 1u );
  AnfPolynomial result( num_vars_ );
  result.monomials_.reserve( monomials_.size() );
  for ( auto m : monomials_ )
  {
    if ( !( m & bit ) )
    {
      result.monomials_.push_back( m );
    }
    else if ( value )
    {
      result.monomials_.push_back( m & ~bit );
    }
  }
  if ( value )
  {
    normalize( result.monomials_ );
  }
  return result;
}

bool AnfPolynomial::constant_after_substitution( unsigned var, bool value ) const
{
  const Monomial bit = Monomial( 1 ) << ( var - 1u );
  if ( !value )
  {
    return std::all_of( monomials_.begin(), monomials_.end(),
                        [bit]( Monomial m ) { return m == 0u || ( m & bit ); } );
  }
  /* x_var := 1 maps S to S \ {var}; every non-constant image must cancel with exactly one partner */
  for ( auto m : monomials_ )
  {
    const auto image = m & ~bit;
    if ( image == 0u )
    {
      continue;
    }
    const auto partner = ( m & bit ) ? image : ( m | bit );
    if ( !coefficient( partner ) )
    {
      return false;
    }
  }
  return true;
}

AnfPolynomial AnfPolynomial::shift( unsigned var ) const
{
  const Monomial bit = Monomial( 1 ) << ( var - 1u );
  AnfPolynomial result( num_vars_ );
  result.monomials_ = monomials_;
  for ( auto m : monomials_ )
  {
    if ( m & bit )
    {
      result.monomials_.push_back( m & ~bit );
    }
  }
  normalize( result.monomials_ );
  return result;
}

AnfPolynomial AnfPolynomial::with_num_vars( unsigned num_vars ) const
{
  if ( num_vars >= num_vars_ )
  {
    return from_sorted( num_vars, monomials_ );
  }
  return AnfPolynomial( num_vars, monomials_ );
}

AnfPolynomial AnfPolynomial::operator+( const AnfPolynomial& other ) const
{
  std::vector<Monomial> ms;
  ms.reserve( monomials_.size() + other.monomials_.size() );
  std::set_symmetric_difference( monomials_.begin(), monomials_.end(), other.monomials_.begin(),
                                 other.monomials_.end(), std::back_inserter( ms ) );
  AnfPolynomial result( std::max( num_vars_, other.num_vars_ ) );
  result.monomials_ = std::move( ms );
  return result;
}

AnfPolynomial AnfPolynomial::operator+( bool constant ) const
{
  return constant ? *this + AnfPolynomial::constant( num_vars_, true ) : *this;
}

Monomial row_to_monomial( uint64_t row, unsigned num_vars ) noexcept
{
  Monomial m = 0;
  for ( auto i = 1u; i <= num_vars; ++i )
  {
    if ( row_value( row, num_vars, i ) )
    {
      m |= Monomial( 1 ) << ( i - 1u );
    }
  }
  return m;
}

uint64_t monomial_to_row( Monomial m, unsigned num_vars ) noexcept
{
  uint64_t row = 0;
  for ( auto i = 1u; i <= num_vars; ++i )
  {
    if ( contains_var( m, i ) )
    {
      row |= uint64_t( 1 ) << ( num_vars - i );
    }
  }
  return row;
}

AnfPolynomial anf_from_tt( const TruthTable& f )
{
  auto coefficients = f;
  moebius_in_place( coefficients );

  /* the monomial of a row is its bit reversal; walking rows in reversed
     counting order yields the monomials already sorted */
  const auto n = f.num_vars();
  std::vector<Monomial> ms;
  ms.reserve( coefficients.count_ones() );
  const auto words = coefficients.words();
  const auto top = n == 0u ? 0u : uint64_t( 1 ) << ( n - 1u );
  uint64_t row = 0;
  for ( Monomial m = 0;; ++m )
  {
    if ( ( words[row >> 6u] >> ( row & 63u ) ) & 1u )
    {
      ms.push_back( m );
    }
    if ( m + 1u == ( Monomial( 1 ) << n ) || n == 0u )
    {
      break;
    }
    auto bit = top;
    while ( row & bit )
    {
      row ^= bit;
      bit >>= 1u;
    }
    row |= bit;
  }
  return AnfPolynomial::from_sorted( n, std::move( ms ) );
}

TruthTable tt_from_anf( const AnfPolynomial& p )
{
  TruthTable tt( p.num_vars() );
  for ( auto m : p.monomials() )
  {
    tt.set( monomial_to_row( m, p.num_vars() ), true );
  }
  moebius_in_place( tt );
  return tt;
}

} // namespace canalyze
