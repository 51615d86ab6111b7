#include "canalyze/ncf_fast.hpp"

#include <stdexcept>
#include <string>

#include "canalyze/errors.hpp"

namespace canalyze
{

void validate( const NcfOrderInfo& info, unsigned num_vars )
{
  if ( info.order.size() != num_vars || info.inputs.size() != num_vars || info.outputs.size() != num_vars )
  {
    throw std::invalid_argument( "order information must have exactly " + std::to_string( num_vars ) + " entries" );
  }
  std::vector<bool> seen( num_vars + 1u, false );
  for ( auto v : info.order )
  {
    if ( v < 1u || v > num_vars || seen[v] )
    {
      throw std::invalid_argument( "order is not a permutation of 1.." + std::to_string( num_vars ) );
    }
    seen[v] = true;
  }
}

TruthTable ncf_from_order( const NcfOrderInfo& info )
{
  const auto n = static_cast<unsigned>( info.size() );
  if ( n == 0u )
  {
    throw std::invalid_argument( "ncf_from_order: at least one variable required" );
  }
  validate( info, n );

  auto table = TruthTable::constant( n, !info.outputs.back() );
  for ( auto k = n; k-- > 0u; )
  {
    auto hit = TruthTable::projection( n, info.order[k] );
    if ( !info.inputs[k] )
    {
      hit = ~hit;
    }
    table = ( hit & TruthTable::constant( n, info.outputs[k] ) ) | ( ~hit & table );
  }
  return table;
}

NcfOrderInfo order_info_from_decomposition( const LayerDecomposition& d )
{
  if ( !d.is_ncf() )
  {
    throw DomainError( "order information requires a nested canalizing decomposition" );
  }
  NcfOrderInfo info;
  for ( const auto& layer : d.layers )
  {
    for ( const auto& e : layer.entries )
    {
      info.order.push_back( e.var );
      info.inputs.push_back( e.input );
      info.outputs.push_back( layer.output );
    }
  }
  return info;
}

AnfPolynomial normalize_ncf( const TruthTable& f, const NcfOrderInfo& info )
{
  const auto n = f.num_vars();
  validate( info, n );

  uint64_t shift_row = 0;
  for ( auto k = 0u; k < n; ++k )
  {
    if ( info.inputs[k] )
    {
      shift_row |= uint64_t( 1 ) << ( n - info.order[k] );
    }
  }
  const bool offset = f.get( shift_row );

  TruthTable h( n );
  for ( uint64_t y = 0; y < h.num_rows(); ++y )
  {
    uint64_t x = shift_row;
    for ( auto k = 0u; k < n; ++k )
    {
      if ( row_value( y, n, k + 1u ) )
      {
        x ^= uint64_t( 1 ) << ( n - info.order[k] );
      }
    }
    h.set( y, f.get( x ) != offset );
  }
  return anf_from_tt( h );
}

FastPartition partition_from_normalized( const AnfPolynomial& h )
{
  const auto n = h.num_vars();
  if ( n == 0u )
  {
    throw std::invalid_argument( "partition_from_normalized: at least one variable required" );
  }
  auto prefix = []( unsigned j ) { return j >= 32u ? ~Monomial( 0 ) : ( Monomial( 1 ) << j ) - 1u; };
  const auto all = prefix( n );

  FastPartition result;
  unsigned run = 1u;
  for ( auto j = 1u; j < n; ++j )
  {
    ++result.checks;
    const bool same_layer =
        h.coefficient( prefix( j ) ) == ( h.coefficient( prefix( j + 1u ) ) && h.coefficient( all & ~prefix( j + 1u ) ) );
    if ( same_layer )
    {
      ++run;
    }
    else
    {
      result.layer_sizes.push_back( run );
      run = 1u;
    }
  }
  result.layer_sizes.push_back( run );
  return result;
}

FastPartition fast_layer_partition( const TruthTable& f, const NcfOrderInfo& info )
{
  auto result = partition_from_normalized( normalize_ncf( f, info ) );
  if ( result.layer_sizes != find_layers_tt( f ).layer_vector() )
  {
    throw DomainError( "order information does not describe this function: coefficient partition disagrees "
                       "with its layer structure" );
  }
  return result;
}

} // namespace canalyze
