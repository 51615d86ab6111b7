#include "canalyze/dnf.hpp"

#include <optional>
#include <sstream>

#include "canalyze/errors.hpp"

namespace canalyze
{

namespace
{

/* one formula term: indices (0-based) of conjoined layers and of the negated layer, if any */
struct Term
{
  std::vector<std::size_t> conjoined;
  std::optional<std::size_t> negated;
};

std::vector<Term> formula_terms( const LayerDecomposition& d )
{
  if ( !d.is_ncf() )
  {
    throw DomainError( "a DNF from layers requires a nested canalizing function" );
  }
  const auto r = d.layers.size();
  std::vector<Term> terms;
  Term current;
  /* b = 0 conjoins the odd layers M_1, M_3, ...; b = 1 the even ones M_2, M_4, ... */
  auto next = d.b() ? std::size_t( 0 ) : std::size_t( 1 );
  if ( !d.b() )
  {
    current.conjoined.push_back( 0u );
  }
  while ( true )
  {
    auto term = current;
    if ( next < r )
    {
      term.negated = next;
    }
    terms.push_back( std::move( term ) );
    if ( next + 1u >= r )
    {
      break;
    }
    current.conjoined.push_back( next + 1u );
    next += 2u;
  }
  return terms;
}

Literal keep_literal( const LayerEntry& e )
{
  return {e.var, !e.input};
}

Literal leave_literal( const LayerEntry& e )
{
  return {e.var, e.input};
}

std::string literal_string( const Literal& l )
{
  return ( l.positive ? "x" : "!x" ) + std::to_string( l.var );
}

} // namespace

bool DnfExpression::evaluate( uint64_t row, unsigned num_vars ) const
{
  for ( const auto& clause : clauses )
  {
    bool all = true;
    for ( const auto& l : clause )
    {
      if ( row_value( row, num_vars, l.var ) != l.positive )
      {
        all = false;
        break;
      }
    }
    if ( all )
    {
      return true;
    }
  }
  return false;
}

DnfExpression dnf_from_layers( const LayerDecomposition& d )
{
  DnfExpression e;
  for ( const auto& term : formula_terms( d ) )
  {
    Clause base;
    for ( auto i : term.conjoined )
    {
      for ( const auto& entry : d.layers[i].entries )
      {
        base.push_back( keep_literal( entry ) );
      }
    }
    if ( !term.negated )
    {
      e.clauses.push_back( std::move( base ) );
      continue;
    }
    for ( const auto& entry : d.layers[*term.negated].entries )
    {
      auto clause = base;
      clause.push_back( leave_literal( entry ) );
      e.clauses.push_back( std::move( clause ) );
    }
  }
  return e;
}

std::size_t dnf_clause_count( const LayerDecomposition& d )
{
  std::size_t count = 0;
  for ( const auto& term : formula_terms( d ) )
  {
    count += term.negated ? d.layers[*term.negated].entries.size() : 1u;
  }
  return count;
}

std::string dnf_compact_string( const LayerDecomposition& d )
{
  std::ostringstream os;
  bool first_term = true;
  for ( const auto& term : formula_terms( d ) )
  {
    if ( !first_term )
    {
      os << " | ";
    }
    first_term = false;

    std::vector<std::string> groups;
    for ( auto i : term.conjoined )
    {
      std::string g;
      for ( const auto& entry : d.layers[i].entries )
      {
        g += ( g.empty() ? "" : " & " ) + literal_string( keep_literal( entry ) );
      }
      groups.push_back( "(" + g + ")" );
    }
    if ( term.negated )
    {
      std::string g;
      for ( const auto& entry : d.layers[*term.negated].entries )
      {
        g += ( g.empty() ? "" : " | " ) + literal_string( leave_literal( entry ) );
      }
      groups.push_back( "(" + g + ")" );
    }
    for ( std::size_t i = 0; i < groups.size(); ++i )
    {
      os << ( i ? " & " : "" ) << groups[i];
    }
  }
  return os.str();
}

bool verify_dnf( const DnfExpression& e, const TruthTable& f )
{
  for ( uint64_t r = 0; r < f.num_rows(); ++r )
  {
    if ( e.evaluate( r, f.num_vars() ) != f.get( r ) )
    {
      return false;
    }
  }
  return true;
}

std::string to_string( const DnfExpression& e )
{
  if ( e.clauses.empty() )
  {
    return "0";
  }
  std::ostringstream os;
  for ( std::size_t i = 0; i < e.clauses.size(); ++i )
  {
    if ( i )
    {
      os << " | ";
    }
    if ( e.clauses[i].empty() )
    {
      os << "1";
      continue;
    }
    for ( std::size_t j = 0; j < e.clauses[i].size(); ++j )
    {
      os << ( j ? " & " : "" ) << literal_string( e.clauses[i][j] );
    }
  }
  return os.str();
}

} // namespace canalyze
