#include "canalyze/truth_table.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace canalyze
{

namespace
{

constexpr uint64_t position_patterns[] = {
    0xaaaaaaaaaaaaaaaaull,
    0xccccccccccccccccull,
    0xf0f0f0f0f0f0f0f0ull,
    0xff00ff00ff00ff00ull,
    0xffff0000ffff0000ull,
    0xffffffff00000000ull};

/* packs the 32 bits of `w` at positions whose bit `position` is zero into the low half */
uint64_t compress_half( uint64_t w, unsigned position ) noexcept
{
  w &= ~position_patterns[position];
  for ( auto s = position; s < 5u; ++s )
  {
    w = ( w | ( w >> ( 1u << s ) ) ) & ~position_patterns[s + 1u];
  }
  return w;
}

} // namespace

uint64_t position_pattern( unsigned position ) noexcept
{
  return position_patterns[position];
}

TruthTable::TruthTable( unsigned num_vars )
    : num_vars_( num_vars )
{
  if ( num_vars > max_vars )
  {
    throw std::invalid_argument( "truth tables support at most " + std::to_string( max_vars ) +
                                 " variables, got " + std::to_string( num_vars ) );
  }
  words_.assign( num_words( num_vars ), 0u );
}

TruthTable TruthTable::constant( unsigned num_vars, bool value )
{
  TruthTable tt( num_vars );
  if ( value )
  {
    for ( auto& w : tt.words_ )
    {
      w = ~uint64_t( 0 );
    }
    tt.words_.back() &= tt.last_word_mask();
  }
  return tt;
}

TruthTable TruthTable::projection( unsigned num_vars, unsigned var )
{
  if ( var < 1u || var > num_vars )
  {
    throw std::invalid_argument( "projection: variable x" + std::to_string( var ) + " out of range" );
  }
  TruthTable tt( num_vars );
  const auto position = num_vars - var;
  if ( position < 6u )
  {
    for ( auto& w : tt.words_ )
    {
      w = position_patterns[position];
    }
    tt.words_.back() &= tt.last_word_mask();
  }
  else
  {
    const auto stride = std::size_t( 1 ) << ( position - 6u );
    for ( std::size_t i = 0; i < tt.words_.size(); ++i )
    {
      if ( i & stride )
      {
        tt.words_[i] = ~uint64_t( 0 );
      }
    }
  }
  return tt;
}

uint64_t TruthTable::count_ones() const noexcept
{
  uint64_t total = 0;
  for ( auto w : words_ )
  {
    total += std::popcount( w );
  }
  return total;
}

std::optional<bool> TruthTable::constant_value() const noexcept
{
  const auto ones = count_ones();
  if ( ones == 0u )
  {
    return false;
  }
  if ( ones == num_rows() )
  {
    return true;
  }
  return std::nullopt;
}

uint64_t TruthTable::last_word_mask() const noexcept
{
  return num_vars_ >= 6u ? ~uint64_t( 0 ) : ( uint64_t( 1 ) << ( 1u << num_vars_ ) ) - 1u;
}

std::string TruthTable::to_string() const
{
  std::string s( num_rows(), '0' );
  for ( uint64_t r = 0; r < num_rows(); ++r )
  {
    if ( get( r ) )
    {
      s[r] = '1';
    }
  }
  return s;
}

TruthTable TruthTable::operator~() const
{
  TruthTable result( *this );
  for ( auto& w : result.words_ )
  {
    w = ~w;
  }
  result.words_.back() &= last_word_mask();
  return result;
}

namespace
{

template<typename Op>
TruthTable binary_op( const TruthTable& a, const TruthTable& b, Op op )
{
  if ( a.num_vars() != b.num_vars() )
  {
    throw std::invalid_argument( "truth table operands have different variable counts" );
  }
  TruthTable result( a );
  auto out = result.words();
  const auto rhs = b.words();
  for ( std::size_t i = 0; i < out.size(); ++i )
  {
    out[i] = op( out[i], rhs[i] );
  }
  return result;
}

} // namespace

TruthTable TruthTable::operator&( const TruthTable& other ) const
{
  return binary_op( *this, other, []( uint64_t x, uint64_t y ) { return x & y; } );
}

TruthTable TruthTable::operator|( const TruthTable& other ) const
{
  return binary_op( *this, other, []( uint64_t x, uint64_t y ) { return x | y; } );
}

TruthTable TruthTable::operator^( const TruthTable& other ) const
{
  return binary_op( *this, other, []( uint64_t x, uint64_t y ) { return x ^ y; } );
}

TruthTable restrict( const TruthTable& f, unsigned var, bool value )
{
  const auto n = f.num_vars();
  if ( var < 1u || var > n )
  {
    throw std::invalid_argument( "restrict: variable x" + std::to_string( var ) + " out of range for " +
                                 std::to_string( n ) + " variables" );
  }

  TruthTable result( n - 1u );
  const auto position = n - var;
  const auto in = f.words();
  auto out = result.words();

  if ( position >= 6u )
  {
    const auto block = std::size_t( 1 ) << ( position - 6u );
    const auto offset = value ? block : 0u;
    std::size_t k = 0;
    for ( std::size_t base = 0; base < in.size(); base += 2u * block )
    {
      for ( std::size_t i = 0; i < block; ++i )
      {
        out[k++] = in[base + offset + i];
      }
    }
    return result;
  }

  const auto shift = value ? ( 1u << position ) : 0u;
  if ( n <= 6u )
  {
    out[0] = compress_half( in[0] >> shift, position );
    return result;
  }
  for ( std::size_t i = 0; i < out.size(); ++i )
  {
    const auto lo = compress_half( in[2u * i] >> shift, position );
    const auto hi = compress_half( in[2u * i + 1u] >> shift, position );
    out[i] = lo | ( hi << 32u );
  }
  return result;
}

std::vector<unsigned> essential_vars( const TruthTable& f )
{
  std::vector<unsigned> vars;
  for ( auto i = 1u; i <= f.num_vars(); ++i )
  {
    if ( restrict( f, i, false ) != restrict( f, i, true ) )
    {
      vars.push_back( i );
    }
  }
  return vars;
}

bool lexicographic_less( const TruthTable& a, const TruthTable& b )
{
  if ( a.num_vars() != b.num_vars() )
  {
    return a.num_vars() < b.num_vars();
  }
  const auto wa = a.words();
  const auto wb = b.words();
  for ( std::size_t i = 0; i < wa.size(); ++i )
  {
    const auto diff = wa[i] ^ wb[i];
    if ( diff )
    {
      /* the first differing row is the lowest set bit of the difference */
      return ( wb[i] >> std::countr_zero( diff ) ) & 1u;
    }
  }
  return false;
}

} // namespace canalyze
