// Reference layering by direct row scans.  Deliberately shares nothing with
// the dot-product or polynomial paths: no restriction, no Moebius transform.

#include <optional>
#include <stdexcept>
#include <vector>

#include "canalyze/layers.hpp"

namespace canalyze
{

namespace
{

struct Oracle
{
  unsigned n;
  std::vector<uint8_t> rows;
  std::vector<int> fixed; ///< per variable (0-based): -1 free, else held value

  bool consistent( uint64_t row ) const
  {
    for ( auto i = 0u; i < n; ++i )
    {
      const int bit = ( row >> ( n - 1u - i ) ) & 1u;
      if ( fixed[i] >= 0 && fixed[i] != bit )
      {
        return false;
      }
    }
    return true;
  }

  /* the common output of all free rows with x_{var} = a, if there is one */
  std::optional<bool> forced_output( std::optional<std::pair<unsigned, bool>> extra ) const
  {
    std::optional<bool> seen;
    for ( uint64_t r = 0; r < rows.size(); ++r )
    {
      if ( !consistent( r ) )
      {
        continue;
      }
      if ( extra && ( ( r >> ( n - extra->first ) ) & 1u ) != uint64_t( extra->second ) )
      {
        continue;
      }
      if ( !seen )
      {
        seen = rows[r] != 0u;
      }
      else if ( *seen != ( rows[r] != 0u ) )
      {
        return std::nullopt;
      }
    }
    return seen;
  }

  /* value of the residual when free variables in `ones` are 1 and other free variables are 0 */
  bool residual_at( Monomial ones ) const
  {
    uint64_t row = 0;
    for ( auto i = 0u; i < n; ++i )
    {
      const bool bit = fixed[i] >= 0 ? fixed[i] == 1 : ( ( ones >> i ) & 1u );
      if ( bit )
      {
        row |= uint64_t( 1 ) << ( n - 1u - i );
      }
    }
    return rows[row] != 0u;
  }
};

} // namespace

LayerDecomposition find_layers_oracle( const TruthTable& f )
{
  const auto n = f.num_vars();
  if ( n > 12u )
  {
    throw std::invalid_argument( "find_layers_oracle: at most 12 variables" );
  }

  Oracle oracle{n, std::vector<uint8_t>( f.num_rows() ), std::vector<int>( n, -1 )};
  for ( uint64_t r = 0; r < f.num_rows(); ++r )
  {
    oracle.rows[r] = f.get( r );
  }

  LayerDecomposition d;
  d.num_vars = n;

  while ( true )
  {
    if ( const auto value = oracle.forced_output( std::nullopt ) )
    {
      d.core = AnfPolynomial::constant( n, *value );
      break;
    }

    std::vector<LayerEntry> by_output[2];
    for ( auto var = 1u; var <= n; ++var )
    {
      if ( oracle.fixed[var - 1u] >= 0 )
      {
        continue;
      }
      for ( const bool a : {false, true} )
      {
        if ( const auto out = oracle.forced_output( std::make_pair( var, a ) ) )
        {
          by_output[*out].push_back( {var, a} );
        }
      }
    }

    const bool output = by_output[0].empty();
    if ( by_output[output].empty() )
    {
      /* c_S = sum over T subset of S of g(T), S ranging over subsets of the free variables */
      Monomial free = 0;
      for ( auto i = 0u; i < n; ++i )
      {
        if ( oracle.fixed[i] < 0 )
        {
          free |= Monomial( 1 ) << i;
        }
      }
      std::vector<Monomial> ms;
      for ( Monomial s = free;; s = ( s - 1u ) & free )
      {
        bool c = false;
        for ( Monomial t = s;; t = ( t - 1u ) & s )
        {
          c ^= oracle.residual_at( t );
          if ( t == 0u )
          {
            break;
          }
        }
        if ( c )
        {
          ms.push_back( s );
        }
        if ( s == 0u )
        {
          break;
        }
      }
      d.core = AnfPolynomial( n, std::move( ms ) );
      break;
    }

    Layer layer{by_output[output], output};
    for ( const auto& e : layer.entries )
    {
      oracle.fixed[e.var - 1u] = e.input ? 0 : 1;
    }
    d.layers.push_back( std::move( layer ) );
  }

  std::vector<bool> used( n + 1u, false );
  for ( const auto& layer : d.layers )
  {
    for ( const auto& e : layer.entries )
    {
      used[e.var] = true;
    }
  }
  for ( auto v = 1u; v <= n; ++v )
  {
    if ( !used[v] && !contains_var( d.core.support(), v ) )
    {
      d.fictitious.push_back( v );
    }
  }
  return d;
}

} // namespace canalyze
