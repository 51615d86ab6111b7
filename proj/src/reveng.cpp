#include "canalyze/reveng.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "canalyze/layers.hpp"

namespace canalyze
{

namespace
{

bool divisible_by( const AnfPolynomial& q, unsigned var )
{
  if ( q.is_zero() )
  {
    return false;
  }
  return std::all_of( q.monomials().begin(), q.monomials().end(),
                      [var]( Monomial m ) { return contains_var( m, var ); } );
}

std::vector<SpecMember> sorted_members( const SpecLayer& layer )
{
  auto members = layer.members;
  std::sort( members.begin(), members.end(), []( const auto& a, const auto& b ) { return a.var < b.var; } );
  return members;
}

StructureSpec resolved_spec( const LayerDecomposition& d )
{
  StructureSpec spec{d.num_vars, {}};
  for ( const auto& layer : d.layers )
  {
    SpecLayer out{{}, layer.output};
    for ( const auto& e : layer.entries )
    {
      out.members.push_back( {e.var, e.input} );
    }
    spec.layers.push_back( std::move( out ) );
  }
  return spec;
}

bool decomposition_matches( const LayerDecomposition& d, const StructureSpec& spec )
{
  if ( !d.is_ncf() || d.layers.size() != spec.layers.size() )
  {
    return false;
  }
  for ( std::size_t i = 0; i < d.layers.size(); ++i )
  {
    const auto& actual = d.layers[i];
    const auto& wanted = spec.layers[i];
    if ( wanted.output && *wanted.output != actual.output )
    {
      return false;
    }
    const auto members = sorted_members( wanted );
    if ( members.size() != actual.entries.size() )
    {
      return false;
    }
    for ( std::size_t j = 0; j < members.size(); ++j )
    {
      if ( members[j].var != actual.entries[j].var )
      {
        return false;
      }
      if ( members[j].input && *members[j].input != actual.entries[j].input )
      {
        return false;
      }
    }
  }
  return true;
}

} // namespace

void validate( const StructureSpec& spec )
{
  const auto n = spec.num_vars;
  if ( n == 0u || n > TruthTable::max_vars )
  {
    throw std::invalid_argument( "structure must cover between 1 and " + std::to_string( TruthTable::max_vars ) +
                                 " variables" );
  }
  std::vector<bool> seen( n + 1u, false );
  for ( std::size_t i = 0; i < spec.layers.size(); ++i )
  {
    if ( spec.layers[i].members.empty() )
    {
      throw std::invalid_argument( "layer " + std::to_string( i + 1u ) + " has no variables" );
    }
    for ( const auto& m : spec.layers[i].members )
    {
      if ( m.var < 1u || m.var > n )
      {
        throw std::invalid_argument( "variable x" + std::to_string( m.var ) + " out of range" );
      }
      if ( seen[m.var] )
      {
        throw std::invalid_argument( "variable x" + std::to_string( m.var ) + " appears in more than one place" );
      }
      seen[m.var] = true;
    }
  }
  for ( auto v = 1u; v <= n; ++v )
  {
    if ( !seen[v] )
    {
      throw std::invalid_argument( "variable x" + std::to_string( v ) + " is not assigned to a layer" );
    }
  }
}

bool first_layer_check( const AnfPolynomial& p, unsigned var, bool input )
{
  if ( var < 1u || var > p.num_vars() )
  {
    throw std::invalid_argument( "first_layer_check: variable x" + std::to_string( var ) + " out of range" );
  }
  const auto shifted = input ? p.shift( var ) : p;
  return divisible_by( shifted + shifted.constant_term(), var );
}

std::vector<EnumeratedNcf> enumerate_ncfs( const StructureSpec& spec )
{
  validate( spec );
  const auto n = spec.num_vars;
  if ( n > 12u )
  {
    throw std::invalid_argument( "enumerate_ncfs: at most 12 variables" );
  }

  /* layer i has output b + i (mod 2); every prescribed output pins b */
  std::optional<bool> pinned_b;
  std::size_t pinned_by = 0;
  for ( std::size_t i = 0; i < spec.layers.size(); ++i )
  {
    if ( !spec.layers[i].output )
    {
      continue;
    }
    const bool b = *spec.layers[i].output != ( i % 2u == 1u );
    if ( pinned_b && *pinned_b != b )
    {
      throw std::invalid_argument( "prescribed outputs of layers " + std::to_string( pinned_by + 1u ) + " and " +
                                   std::to_string( i + 1u ) + " contradict the alternation of canalized outputs" );
    }
    pinned_b = b;
    pinned_by = i;
  }

  std::vector<std::pair<std::size_t, std::size_t>> open_inputs;
  std::vector<std::vector<SpecMember>> layers;
  for ( std::size_t i = 0; i < spec.layers.size(); ++i )
  {
    layers.push_back( sorted_members( spec.layers[i] ) );
    for ( std::size_t j = 0; j < layers[i].size(); ++j )
    {
      if ( !layers[i][j].input )
      {
        open_inputs.emplace_back( i, j );
      }
    }
  }

  std::vector<bool> b_choices;
  if ( pinned_b )
  {
    b_choices.push_back( *pinned_b );
  }
  else
  {
    b_choices = {false, true};
  }

  std::vector<EnumeratedNcf> found;
  for ( const bool b : b_choices )
  {
    for ( uint64_t choice = 0; choice < ( uint64_t( 1 ) << open_inputs.size() ); ++choice )
    {
      auto completed = layers;
      for ( std::size_t k = 0; k < open_inputs.size(); ++k )
      {
        completed[open_inputs[k].first][open_inputs[k].second].input = ( choice >> k ) & 1u;
      }

      LayerDecomposition d;
      d.num_vars = n;
      for ( std::size_t i = 0; i < completed.size(); ++i )
      {
        Layer layer{{}, b != ( i % 2u == 1u )};
        for ( const auto& m : completed[i] )
        {
          layer.entries.push_back( {m.var, *m.input} );
        }
        d.layers.push_back( std::move( layer ) );
      }
      d.core = AnfPolynomial::constant( n, !d.layers.back().output );

      auto table = reconstruct( d );
      const auto canonical = find_layers_tt( table );
      if ( !decomposition_matches( canonical, spec ) )
      {
        continue;
      }
      found.push_back( {anf_from_tt( table ), std::move( table ), resolved_spec( canonical )} );
    }
  }

  std::sort( found.begin(), found.end(),
             []( const auto& x, const auto& y ) { return lexicographic_less( x.table, y.table ); } );
  found.erase( std::unique( found.begin(), found.end(),
                            []( const auto& x, const auto& y ) { return x.table == y.table; } ),
               found.end() );
  return found;
}

bool spec_match( const TruthTable& f, const StructureSpec& spec )
{
  validate( spec );
  if ( f.num_vars() != spec.num_vars )
  {
    throw std::invalid_argument( "spec_match: function and structure have different variable counts" );
  }
  return decomposition_matches( find_layers_tt( f ), spec );
}

} // namespace canalyze
