#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "canalyze/dnf.hpp"
#include "canalyze/errors.hpp"
#include "canalyze/genbench.hpp"
#include "canalyze/parse.hpp"

using namespace canalyze;

namespace
{

using ClauseSet = std::set<std::set<std::string>>;

/* "a & b | c" as a set of literal sets, so ordering does not matter */
ClauseSet clause_set( const std::string& text )
{
  ClauseSet out;
  std::string rest = text;
  for ( std::size_t pos; !rest.empty(); )
  {
    pos = rest.find( " | " );
    const auto clause = rest.substr( 0, pos );
    rest = pos == std::string::npos ? "" : rest.substr( pos + 3u );
    std::set<std::string> lits;
    std::stringstream ss( clause );
    for ( std::string lit; ss >> lit; )
    {
      if ( lit != "&" )
      {
        lits.insert( lit );
      }
    }
    out.insert( lits );
  }
  return out;
}

DnfExpression dnf_of_anf( const std::string& poly )
{
  return dnf_from_layers( find_layers_tt( tt_from_anf( parse_anf( poly ) ) ) );
}

} // namespace

TEST( Dnf, FirstWorkedExample )
{
  const std::string poly = "x1*x2*x3*x4 + x1*x2*x3 + x1*x2*x4 + x2*x3*x4 + x1*x2 + x1*x3 + x2*x3 + x2*x4 + x1 + "
                           "x2 + x3 + 1";
  const auto e = dnf_of_anf( poly );
  EXPECT_EQ( clause_set( to_string( e ) ), clause_set( "!x1 & !x3 & !x2 | !x1 & !x3 & x4" ) );
  EXPECT_TRUE( verify_dnf( e, tt_from_anf( parse_anf( poly ) ) ) );
}

TEST( Dnf, SecondWorkedExample )
{
  const std::string poly = "x1*x2*x3*x4 + x1*x2*x3 + x2*x3*x4 + x2*x3 + x4";
  const auto e = dnf_of_anf( poly );
  EXPECT_EQ( clause_set( to_string( e ) ), clause_set( "x4 | !x1 & x2 & x3" ) );
  EXPECT_TRUE( verify_dnf( e, tt_from_anf( parse_anf( poly ) ) ) );
}

TEST( Dnf, CompactFormAndClauseCount )
{
  const auto f = tt_from_anf( parse_anf( "x1*x2*x3*x4 + x1*x2*x3 + x1*x2*x4 + x2*x3*x4 + x1*x2 + x1*x3 + x2*x3 + "
                                         "x2*x4 + x1 + x2 + x3 + 1" ) );
  const auto d = find_layers_tt( f );
  EXPECT_EQ( dnf_clause_count( d ), 2u );
  EXPECT_EQ( dnf_compact_string( d ), "(!x1 & !x3) & (!x2 | x4)" );
}

TEST( Dnf, ClauseCountPredictsTheExpansion )
{
  std::mt19937_64 rng( 71 );
  for ( int t = 0; t < 200; ++t )
  {
    const auto n = 1u + static_cast<unsigned>( rng() % 10u );
    const auto d = find_layers_tt( random_ncf( n, rng() ) );
    EXPECT_EQ( dnf_from_layers( d ).clauses.size(), dnf_clause_count( d ) );
  }
}

TEST( Dnf, SoundOnRandomNcfs )
{
  std::mt19937_64 rng( 72 );
  for ( int t = 0; t < 200; ++t )
  {
    const auto n = 1u + static_cast<unsigned>( rng() % 10u );
    const auto f = random_ncf( n, rng() );
    ASSERT_TRUE( verify_dnf( dnf_from_layers( find_layers_tt( f ) ), f ) ) << f.to_string();
  }
}

TEST( Dnf, EvaluateAndVerify )
{
  /* x1 & !x2 | x3 over three variables */
  const DnfExpression e{{{{1, true}, {2, false}}, {{3, true}}}};
  const auto f = ( TruthTable::projection( 3, 1 ) & ~TruthTable::projection( 3, 2 ) ) | TruthTable::projection( 3, 3 );
  EXPECT_TRUE( verify_dnf( e, f ) );
  EXPECT_FALSE( verify_dnf( e, ~f ) );
  EXPECT_EQ( to_string( e ), "x1 & !x2 | x3" );
  EXPECT_EQ( to_string( DnfExpression{} ), "0" );
  EXPECT_EQ( to_string( DnfExpression{{Clause{}}} ), "1" );
}

TEST( Dnf, RejectsNonNestedCanalizingFunctions )
{
  const auto f = TruthTable::projection( 2, 1 ) ^ TruthTable::projection( 2, 2 );
  EXPECT_THROW( dnf_from_layers( find_layers_tt( f ) ), DomainError );
  EXPECT_THROW( dnf_from_layers( find_layers_tt( TruthTable::constant( 2, true ) ) ), DomainError );
}
