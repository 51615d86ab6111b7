#include "canalyze/layers.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace canalyze
{

unsigned LayerDecomposition::depth() const noexcept
{
  unsigned k = 0;
  for ( const auto& layer : layers )
  {
    k += static_cast<unsigned>( layer.entries.size() );
  }
  return k;
}

std::vector<unsigned> LayerDecomposition::layer_vector() const
{
  std::vector<unsigned> sizes;
  for ( const auto& layer : layers )
  {
    sizes.push_back( static_cast<unsigned>( layer.entries.size() ) );
  }
  return sizes;
}

AnfPolynomial LayerDecomposition::standard_core() const
{
  if ( layers.empty() )
  {
    return core;
  }
  return core + layers.back().output;
}

void validate( const LayerDecomposition& d )
{
  const auto n = d.num_vars;
  std::vector<int> owner( n + 1u, 0 );
  auto claim = [&]( unsigned var, const char* what ) {
    if ( var < 1u || var > n )
    {
      throw std::invalid_argument( std::string( what ) + " variable x" + std::to_string( var ) + " out of range" );
    }
    if ( owner[var]++ )
    {
      throw std::invalid_argument( "variable x" + std::to_string( var ) + " appears more than once" );
    }
  };

  for ( std::size_t i = 0; i < d.layers.size(); ++i )
  {
    const auto& layer = d.layers[i];
    if ( layer.entries.empty() )
    {
      throw std::invalid_argument( "layer " + std::to_string( i + 1u ) + " is empty" );
    }
    for ( std::size_t j = 0; j < layer.entries.size(); ++j )
    {
      if ( j > 0u && layer.entries[j - 1u].var >= layer.entries[j].var )
      {
        throw std::invalid_argument( "layer " + std::to_string( i + 1u ) + " is not sorted by variable" );
      }
      claim( layer.entries[j].var, "layer" );
    }
    if ( i > 0u && d.layers[i - 1u].output == layer.output )
    {
      throw std::invalid_argument( "layers " + std::to_string( i ) + " and " + std::to_string( i + 1u ) +
                                   " have the same canalized output" );
    }
  }

  const auto support = d.core.support();
  for ( auto v = 1u; v <= 32u; ++v )
  {
    if ( contains_var( support, v ) )
    {
      claim( v, "core" );
    }
  }
  for ( auto v : d.fictitious )
  {
    claim( v, "fictitious" );
  }
  for ( auto v = 1u; v <= n; ++v )
  {
    if ( !owner[v] )
    {
      throw std::invalid_argument( "variable x" + std::to_string( v ) + " is not accounted for" );
    }
  }

  if ( !d.layers.empty() && d.core.is_constant() && d.core.constant_term() == d.layers.back().output )
  {
    throw std::invalid_argument( "constant core equals the last canalized output" );
  }
}

ColumnMaskCache::ColumnMaskCache( unsigned max_vars )
    : max_vars_( max_vars )
{
  if ( max_vars > TruthTable::max_vars )
  {
    throw std::invalid_argument( "column mask cache: too many variables" );
  }
  for ( auto position = 0u; position < max_vars; ++position )
  {
    /* t_1 of the (position + 1)-variable table is exactly the mask of this bit */
    const auto column = TruthTable::projection( max_vars, max_vars - position );
    by_position_.emplace_back( column.words().begin(), column.words().end() );
    if ( position < 6u )
    {
      by_position_.back().assign( by_position_.back().size(), position_pattern( position ) );
    }
  }
}

std::span<const uint64_t> ColumnMaskCache::column( unsigned num_vars, unsigned var ) const
{
  if ( num_vars > max_vars_ || var < 1u || var > num_vars )
  {
    throw std::invalid_argument( "column mask cache: column out of range" );
  }
  const auto& words = by_position_[num_vars - var];
  return std::span<const uint64_t>( words.data(), num_words( num_vars ) );
}

namespace
{

/* T_m built row by row, one packed column per variable */
std::vector<std::vector<uint64_t>> build_columns( unsigned m )
{
  std::vector<std::vector<uint64_t>> columns( m, std::vector<uint64_t>( num_words( m ), 0u ) );
  const auto rows = uint64_t( 1 ) << m;
  for ( uint64_t r = 0; r < rows; ++r )
  {
    for ( auto i = 1u; i <= m; ++i )
    {
      if ( row_value( r, m, i ) )
      {
        columns[i - 1u][r >> 6] |= uint64_t( 1 ) << ( r & 63u );
      }
    }
  }
  return columns;
}

class Columns
{
public:
  Columns( unsigned m, const ColumnMaskCache* cache )
      : m_( m ), cache_( cache )
  {
    if ( !cache_ )
    {
      built_ = build_columns( m );
    }
  }

  std::span<const uint64_t> operator()( unsigned var ) const
  {
    return cache_ ? cache_->column( m_, var ) : std::span<const uint64_t>( built_[var - 1u] );
  }

private:
  unsigned m_;
  const ColumnMaskCache* cache_;
  std::vector<std::vector<uint64_t>> built_;
};

/* <v, t> and <v, 1 - t>; the zero padding of v keeps unused rows out of both */
std::pair<uint64_t, uint64_t> dot_pair( std::span<const uint64_t> v, std::span<const uint64_t> t )
{
  uint64_t with_one = 0, with_zero = 0;
  for ( std::size_t i = 0; i < v.size(); ++i )
  {
    with_one += std::popcount( v[i] & t[i] );
    with_zero += std::popcount( v[i] & ~t[i] );
  }
  return {with_one, with_zero};
}

struct OutputSets
{
  std::vector<unsigned> in0;
  std::vector<unsigned> in1;

  bool empty() const noexcept { return in0.empty() && in1.empty(); }
};

/* variables of `v`'s support forcing `v` to 1: <v, 1 - t_i> = 2^{m-1} or <v, t_i> = 2^{m-1} */
OutputSets forcing_sets( const TruthTable& v, const Columns& columns )
{
  const auto m = v.num_vars();
  const auto half = uint64_t( 1 ) << ( m - 1u );
  OutputSets sets;
  for ( auto i = 1u; i <= m; ++i )
  {
    const auto [with_one, with_zero] = dot_pair( v.words(), columns( i ) );
    if ( with_zero == half )
    {
      sets.in0.push_back( i );
    }
    if ( with_one == half )
    {
      sets.in1.push_back( i );
    }
  }
  return sets;
}

/* labels increase, so the relabelled monomials keep their order */
AnfPolynomial relabel( const AnfPolynomial& local, const std::vector<unsigned>& labels, unsigned n )
{
  if ( labels.size() == n )
  {
    return local.with_num_vars( n );
  }
  std::vector<Monomial> ms;
  ms.reserve( local.size() );
  for ( auto m : local.monomials() )
  {
    Monomial out = 0;
    for ( auto bits = m; bits; bits &= bits - 1u )
    {
      out |= Monomial( 1 ) << ( labels[std::countr_zero( bits )] - 1u );
    }
    ms.push_back( out );
  }
  return AnfPolynomial::from_sorted( n, std::move( ms ) );
}

void fill_fictitious( LayerDecomposition& d )
{
  std::vector<bool> used( d.num_vars + 1u, false );
  for ( const auto& layer : d.layers )
  {
    for ( const auto& e : layer.entries )
    {
      used[e.var] = true;
    }
  }
  const auto support = d.core.support();
  d.fictitious.clear();
  for ( auto v = 1u; v <= d.num_vars; ++v )
  {
    if ( !used[v] && !contains_var( support, v ) )
    {
      d.fictitious.push_back( v );
    }
  }
}

TruthTable literal_table( unsigned n, unsigned var, bool positive )
{
  const auto x = TruthTable::projection( n, var );
  return positive ? x : ~x;
}

} // namespace

DotProducts canalizing_dot_products( const TruthTable& f )
{
  const auto m = f.num_vars();
  const auto columns = build_columns( m );
  const auto complement = ~f;
  DotProducts dp;
  for ( auto i = 1u; i <= m; ++i )
  {
    const auto [f1, f0] = dot_pair( f.words(), columns[i - 1u] );
    const auto [z1, z0] = dot_pair( complement.words(), columns[i - 1u] );
    dp.ones_with_one.push_back( f1 );
    dp.ones_with_zero.push_back( f0 );
    dp.zeros_with_one.push_back( z1 );
    dp.zeros_with_zero.push_back( z0 );
  }
  return dp;
}

CanalizingSets canalizing_sets( const TruthTable& f )
{
  if ( f.is_constant() )
  {
    throw std::invalid_argument( "canalizing_sets: constant functions are not canalizing" );
  }
  const Columns columns( f.num_vars(), nullptr );
  auto zeros = forcing_sets( ~f, columns );
  auto ones = forcing_sets( f, columns );
  return {std::move( zeros.in0 ), std::move( zeros.in1 ), std::move( ones.in0 ), std::move( ones.in1 )};
}

LayerDecomposition find_layers_tt( const TruthTable& f, const ColumnMaskCache* masks )
{
  const auto n = f.num_vars();
  if ( masks && masks->max_vars() < n )
  {
    throw std::invalid_argument( "find_layers_tt: column mask cache is too small" );
  }

  LayerDecomposition d;
  d.num_vars = n;
  auto residual = f;
  std::vector<unsigned> labels( n );
  for ( auto i = 0u; i < n; ++i )
  {
    labels[i] = i + 1u;
  }

  while ( true )
  {
    if ( const auto value = residual.constant_value() )
    {
      d.core = AnfPolynomial::constant( n, *value );
      break;
    }

    const Columns columns( residual.num_vars(), masks );
    bool output = false;
    auto sets = forcing_sets( ~residual, columns );
    if ( sets.empty() )
    {
      output = true;
      sets = forcing_sets( residual, columns );
      if ( sets.empty() )
      {
        d.core = relabel( anf_from_tt( residual ), labels, n );
        break;
      }
    }

    /* local index -> canalizing input, in descending order for restriction */
    std::vector<LayerEntry> local;
    for ( auto i : sets.in0 )
    {
      local.push_back( {i, false} );
    }
    for ( auto i : sets.in1 )
    {
      local.push_back( {i, true} );
    }
    std::sort( local.begin(), local.end(), []( const auto& a, const auto& b ) { return a.var > b.var; } );

    Layer layer{{}, output};
    for ( const auto& e : local )
    {
      layer.entries.push_back( {labels[e.var - 1u], e.input} );
      residual = restrict( residual, e.var, !e.input );
      labels.erase( labels.begin() + ( e.var - 1u ) );
    }
    std::sort( layer.entries.begin(), layer.entries.end(), []( const auto& a, const auto& b ) { return a.var < b.var; } );
    d.layers.push_back( std::move( layer ) );
  }

  fill_fictitious( d );
  return d;
}

LayerDecomposition find_layers_anf( const AnfPolynomial& p )
{
  LayerDecomposition d;
  d.num_vars = p.num_vars();
  auto residual = p;

  while ( !residual.is_constant() )
  {
    const auto support = residual.support();
    std::vector<LayerEntry> to_zero, to_one;
    for ( auto bits = support; bits; bits &= bits - 1u )
    {
      const auto var = static_cast<unsigned>( std::countr_zero( bits ) ) + 1u;
      const auto var_bit = Monomial( 1 ) << ( var - 1u );
      if ( residual.constant_after_substitution( var, false ) )
      {
        /* every other monomial vanishes: what remains is the constant term */
        ( residual.constant_term() ? to_one : to_zero ).push_back( {var, false} );
      }
      if ( residual.constant_after_substitution( var, true ) )
      {
        const bool value = residual.coefficient( 0u ) != residual.coefficient( var_bit );
        ( value ? to_one : to_zero ).push_back( {var, true} );
      }
    }

    /* both outputs occur only for a single literal, whose canonical form canalizes to 0 */
    Layer layer{{}, false};
    if ( !to_zero.empty() )
    {
      layer.entries = std::move( to_zero );
    }
    else if ( !to_one.empty() )
    {
      layer.entries = std::move( to_one );
      layer.output = true;
    }
    else
    {
      break;
    }

    for ( const auto& e : layer.entries )
    {
      residual = residual.substitute( e.var, !e.input );
    }
    d.layers.push_back( std::move( layer ) );
  }

  d.core = residual;
  fill_fictitious( d );
  return d;
}

TruthTable reconstruct( const LayerDecomposition& d )
{
  validate( d );
  const auto n = d.num_vars;
  auto value = tt_from_anf( d.standard_core().with_num_vars( n ) );
  if ( d.layers.empty() )
  {
    return value;
  }

  /* M_i is 1 exactly when no variable of layer i takes its canalizing input */
  auto monomial_table = [n]( const Layer& layer ) {
    auto m = TruthTable::constant( n, true );
    for ( const auto& e : layer.entries )
    {
      m = m & literal_table( n, e.var, !e.input );
    }
    return m;
  };

  value = monomial_table( d.layers.back() ) & value;
  for ( auto i = d.layers.size() - 1u; i-- > 0u; )
  {
    value = monomial_table( d.layers[i] ) & ~value;
  }
  return d.b() ? ~value : value;
}

LayerDecomposition negate_decomposition( const LayerDecomposition& d )
{
  auto result = d;
  for ( auto& layer : result.layers )
  {
    layer.output = !layer.output;
  }
  result.core = result.core + true;

  if ( result.layers.size() == 1u && result.layers.front().entries.size() == 1u && result.core.is_constant() )
  {
    auto& layer = result.layers.front();
    layer.entries.front().input = !layer.entries.front().input;
    layer.output = !layer.output;
    result.core = result.core + true;
  }
  return result;
}

} // namespace canalyze
