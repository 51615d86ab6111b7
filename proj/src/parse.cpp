#include "canalyze/parse.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <memory>
#include <sstream>
#include <stdexcept>

namespace canalyze
{

namespace
{

class Cursor
{
public:
  Cursor( std::string_view text, std::size_t base = 0u ) : text_( text ), base_( base ) {}

  void skip_space()
  {
    while ( pos_ < text_.size() && std::isspace( static_cast<unsigned char>( text_[pos_] ) ) )
    {
      ++pos_;
    }
  }

  bool at_end()
  {
    skip_space();
    return pos_ >= text_.size();
  }

  char peek()
  {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool accept( char c )
  {
    if ( peek() == c )
    {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect( char c )
  {
    if ( !accept( c ) )
    {
      fail( std::string( "expected '" ) + c + "'" );
    }
  }

  /* 'x' followed by a positive decimal index */
  unsigned variable()
  {
    skip_space();
    const auto start = pos_;
    if ( pos_ >= text_.size() || text_[pos_] != 'x' )
    {
      fail( "expected variable" );
    }
    ++pos_;
    if ( pos_ >= text_.size() || !std::isdigit( static_cast<unsigned char>( text_[pos_] ) ) )
    {
      fail( "expected variable index" );
    }
    unsigned long index = 0;
    while ( pos_ < text_.size() && std::isdigit( static_cast<unsigned char>( text_[pos_] ) ) )
    {
      index = index * 10u + static_cast<unsigned>( text_[pos_] - '0' );
      if ( index > TruthTable::max_vars )
      {
        throw ParseError( "variable index exceeds " + std::to_string( TruthTable::max_vars ), base_ + start );
      }
      ++pos_;
    }
    if ( index == 0u )
    {
      throw ParseError( "variable index 0 is not allowed (variables start at x1)", base_ + start );
    }
    return static_cast<unsigned>( index );
  }

  /* '0', '1' or '?' (unknown) */
  std::optional<bool> tri_bit()
  {
    const auto c = peek();
    if ( c == '0' || c == '1' || c == '?' )
    {
      ++pos_;
      return c == '?' ? std::nullopt : std::optional<bool>( c == '1' );
    }
    fail( "expected 0, 1 or ?" );
  }

  /* a single constant digit that is not the start of a longer number */
  bool constant_digit( char digit )
  {
    if ( peek() != digit )
    {
      return false;
    }
    if ( pos_ + 1u < text_.size() && std::isalnum( static_cast<unsigned char>( text_[pos_ + 1u] ) ) )
    {
      fail( "unexpected character after constant" );
    }
    ++pos_;
    return true;
  }

  bool accept_word( std::string_view word )
  {
    skip_space();
    if ( text_.substr( pos_, word.size() ) == word )
    {
      pos_ += word.size();
      return true;
    }
    return false;
  }

  [[noreturn]] void fail( const std::string& message )
  {
    skip_space();
    if ( pos_ >= text_.size() )
    {
      throw ParseError( message + ", found end of input", base_ + pos_ );
    }
    throw ParseError( message + ", found '" + text_[pos_] + "'", base_ + pos_ );
  }

private:
  std::string_view text_;
  std::size_t base_;
  std::size_t pos_ = 0u;
};

unsigned resolve_num_vars( unsigned max_index, std::optional<unsigned> num_vars )
{
  if ( !num_vars )
  {
    return max_index;
  }
  if ( *num_vars < max_index )
  {
    throw std::invalid_argument( "explicit variable count " + std::to_string( *num_vars ) +
                                 " is below the largest variable index x" + std::to_string( max_index ) );
  }
  if ( *num_vars > TruthTable::max_vars )
  {
    throw std::invalid_argument( "at most " + std::to_string( TruthTable::max_vars ) + " variables are supported" );
  }
  return *num_vars;
}

struct Expr
{
  enum class Kind
  {
    constant,
    variable,
    negation,
    conjunction,
    disjunction
  } kind;
  unsigned value = 0u;
  std::vector<std::unique_ptr<Expr>> operands;
};

std::unique_ptr<Expr> node( Expr::Kind kind, unsigned value = 0u )
{
  auto e = std::make_unique<Expr>();
  e->kind = kind;
  e->value = value;
  return e;
}

class LogicParser
{
public:
  explicit LogicParser( std::string_view text ) : cursor_( text ) {}

  std::unique_ptr<Expr> parse()
  {
    auto e = disjunction();
    if ( !cursor_.at_end() )
    {
      cursor_.fail( "unexpected input" );
    }
    return e;
  }

  unsigned max_index() const noexcept { return max_index_; }

private:
  std::unique_ptr<Expr> disjunction()
  {
    auto first = conjunction();
    if ( cursor_.peek() != '|' )
    {
      return first;
    }
    auto e = node( Expr::Kind::disjunction );
    e->operands.push_back( std::move( first ) );
    while ( cursor_.accept( '|' ) )
    {
      e->operands.push_back( conjunction() );
    }
    return e;
  }

  std::unique_ptr<Expr> conjunction()
  {
    auto first = unary();
    if ( cursor_.peek() != '&' )
    {
      return first;
    }
    auto e = node( Expr::Kind::conjunction );
    e->operands.push_back( std::move( first ) );
    while ( cursor_.accept( '&' ) )
    {
      e->operands.push_back( unary() );
    }
    return e;
  }

  std::unique_ptr<Expr> unary()
  {
    if ( cursor_.accept( '!' ) || cursor_.accept( '~' ) )
    {
      auto e = node( Expr::Kind::negation );
      e->operands.push_back( unary() );
      return e;
    }
    if ( cursor_.accept( '(' ) )
    {
      auto e = disjunction();
      cursor_.expect( ')' );
      return e;
    }
    if ( cursor_.constant_digit( '0' ) )
    {
      return node( Expr::Kind::constant, 0u );
    }
    if ( cursor_.constant_digit( '1' ) )
    {
      return node( Expr::Kind::constant, 1u );
    }
    if ( cursor_.peek() == 'x' )
    {
      const auto index = cursor_.variable();
      max_index_ = std::max( max_index_, index );
      return node( Expr::Kind::variable, index );
    }
    cursor_.fail( "expected variable, constant, '!' or '('" );
  }

  Cursor cursor_;
  unsigned max_index_ = 0u;
};

TruthTable evaluate( const Expr& e, unsigned n )
{
  switch ( e.kind )
  {
  case Expr::Kind::constant:
    return TruthTable::constant( n, e.value != 0u );
  case Expr::Kind::variable:
    return TruthTable::projection( n, e.value );
  case Expr::Kind::negation:
    return ~evaluate( *e.operands.front(), n );
  case Expr::Kind::conjunction:
  case Expr::Kind::disjunction:
  {
    auto acc = evaluate( *e.operands.front(), n );
    for ( std::size_t i = 1; i < e.operands.size(); ++i )
    {
      const auto rhs = evaluate( *e.operands[i], n );
      acc = e.kind == Expr::Kind::conjunction ? ( acc & rhs ) : ( acc | rhs );
    }
    return acc;
  }
  }
  return TruthTable( n );
}

std::string_view trim( std::string_view s )
{
  while ( !s.empty() && std::isspace( static_cast<unsigned char>( s.front() ) ) )
  {
    s.remove_prefix( 1 );
  }
  while ( !s.empty() && std::isspace( static_cast<unsigned char>( s.back() ) ) )
  {
    s.remove_suffix( 1 );
  }
  return s;
}

bool is_identifier( std::string_view s )
{
  if ( s.empty() || !( std::isalpha( static_cast<unsigned char>( s.front() ) ) || s.front() == '_' ) )
  {
    return false;
  }
  return std::all_of( s.begin(), s.end(), []( char c ) {
    return std::isalnum( static_cast<unsigned char>( c ) ) || c == '_' || c == '-' || c == '.';
  } );
}

} // namespace

Format parse_format( std::string_view name )
{
  if ( name == "anf" )
  {
    return Format::anf;
  }
  if ( name == "logic" )
  {
    return Format::logic;
  }
  if ( name == "table" )
  {
    return Format::table;
  }
  throw std::invalid_argument( "unknown format '" + std::string( name ) + "' (expected anf, logic or table)" );
}

AnfPolynomial parse_anf( std::string_view text, std::optional<unsigned> num_vars )
{
  Cursor cursor( text );
  std::vector<Monomial> monomials;
  unsigned max_index = 0u;

  do
  {
    if ( cursor.constant_digit( '1' ) )
    {
      monomials.push_back( 0u );
    }
    else if ( cursor.constant_digit( '0' ) )
    {
      /* contributes nothing */
    }
    else
    {
      Monomial m = 0;
      do
      {
        const auto index = cursor.variable();
        max_index = std::max( max_index, index );
        m |= Monomial( 1 ) << ( index - 1u );
      } while ( cursor.accept( '*' ) );
      monomials.push_back( m );
    }
  } while ( cursor.accept( '+' ) || cursor.accept( '-' ) );

  if ( !cursor.at_end() )
  {
    cursor.fail( "expected '+' or end of polynomial" );
  }
  return AnfPolynomial( resolve_num_vars( max_index, num_vars ), std::move( monomials ) );
}

TruthTable parse_logic( std::string_view text, std::optional<unsigned> num_vars )
{
  LogicParser parser( text );
  const auto expr = parser.parse();
  return evaluate( *expr, resolve_num_vars( parser.max_index(), num_vars ) );
}

TruthTable parse_table( std::string_view text )
{
  const auto body = trim( text );
  for ( std::size_t i = 0; i < body.size(); ++i )
  {
    if ( body[i] != '0' && body[i] != '1' )
    {
      throw ParseError( std::string( "truth table digits must be 0 or 1, found '" ) + body[i] + "'",
                        static_cast<std::size_t>( body.data() - text.data() ) + i );
    }
  }
  if ( body.size() < 2u || !std::has_single_bit( body.size() ) )
  {
    throw ParseError( "truth table length " + std::to_string( body.size() ) + " is not a power of two >= 2", 0u );
  }
  const auto n = static_cast<unsigned>( std::countr_zero( body.size() ) );
  if ( n > TruthTable::max_vars )
  {
    throw ParseError( "truth table has more than " + std::to_string( TruthTable::max_vars ) + " variables", 0u );
  }
  TruthTable tt( n );
  for ( std::size_t r = 0; r < body.size(); ++r )
  {
    tt.set( r, body[r] == '1' );
  }
  return tt;
}

std::string render_anf( const AnfPolynomial& p )
{
  if ( p.is_zero() )
  {
    return "0";
  }
  std::vector<Monomial> order( p.monomials().begin(), p.monomials().end() );
  /* lower variable indices first within a degree: compare bit-reversed masks descending */
  std::sort( order.begin(), order.end(), []( Monomial a, Monomial b ) {
    const auto da = std::popcount( a ), db = std::popcount( b );
    if ( da != db )
    {
      return da > db;
    }
    const auto diff = a ^ b;
    return diff != 0u && ( a & ( diff & ( ~diff + 1u ) ) ) != 0u;
  } );

  std::string out;
  for ( const auto m : order )
  {
    if ( !out.empty() )
    {
      out += " + ";
    }
    if ( m == 0u )
    {
      out += "1";
      continue;
    }
    bool first = true;
    for ( auto bits = m; bits; bits &= bits - 1u )
    {
      out += ( first ? "x" : "*x" ) + std::to_string( std::countr_zero( bits ) + 1 );
      first = false;
    }
  }
  return out;
}

std::vector<FunctionSource> split_function_lines( std::string_view text, Format format )
{
  std::vector<FunctionSource> sources;
  std::size_t start = 0;
  while ( start <= text.size() )
  {
    auto end = text.find( '\n', start );
    if ( end == std::string_view::npos )
    {
      end = text.size();
    }
    auto line = text.substr( start, end - start );
    if ( const auto hash = line.find( '#' ); hash != std::string_view::npos )
    {
      line = line.substr( 0, hash );
    }
    line = trim( line );
    if ( !line.empty() )
    {
      FunctionSource source{std::nullopt, format, std::string( line )};
      if ( const auto colon = line.find( ':' ); colon != std::string_view::npos )
      {
        const auto name = trim( line.substr( 0, colon ) );
        if ( is_identifier( name ) )
        {
          source.name = std::string( name );
          source.body = std::string( trim( line.substr( colon + 1u ) ) );
        }
      }
      sources.push_back( std::move( source ) );
    }
    start = end + 1u;
  }
  return sources;
}

TruthTable to_truth_table( const FunctionSource& source, std::optional<unsigned> num_vars )
{
  switch ( source.format )
  {
  case Format::anf:
    return tt_from_anf( parse_anf( source.body, num_vars ) );
  case Format::logic:
    return parse_logic( source.body, num_vars );
  case Format::table:
  {
    auto tt = parse_table( source.body );
    if ( num_vars && *num_vars != tt.num_vars() )
    {
      throw std::invalid_argument( "explicit variable count does not match the table length" );
    }
    return tt;
  }
  }
  throw std::invalid_argument( "unknown format" );
}

StructureSpec parse_structure_spec( std::string_view text )
{
  StructureSpec spec;
  unsigned max_index = 0u;
  std::size_t start = 0;
  while ( start <= text.size() )
  {
    auto end = text.find( '\n', start );
    if ( end == std::string_view::npos )
    {
      end = text.size();
    }
    auto line = text.substr( start, end - start );
    if ( const auto hash = line.find( '#' ); hash != std::string_view::npos )
    {
      line = line.substr( 0, hash );
    }
    if ( !trim( line ).empty() )
    {
      Cursor cursor( line, start );
      if ( !cursor.accept_word( "layer" ) )
      {
        cursor.fail( "expected 'layer'" );
      }
      if ( !cursor.accept_word( "output" ) )
      {
        cursor.fail( "expected 'output='" );
      }
      cursor.expect( '=' );
      SpecLayer layer{{}, cursor.tri_bit()};
      cursor.expect( ':' );
      do
      {
        const auto var = cursor.variable();
        max_index = std::max( max_index, var );
        cursor.expect( '=' );
        layer.members.push_back( {var, cursor.tri_bit()} );
      } while ( cursor.accept( ',' ) );
      if ( !cursor.at_end() )
      {
        cursor.fail( "expected ',' or end of line" );
      }
      spec.layers.push_back( std::move( layer ) );
    }
    start = end + 1u;
  }
  if ( spec.layers.empty() )
  {
    throw ParseError( "structure has no layers", 0u );
  }
  spec.num_vars = max_index;
  validate( spec );
  return spec;
}

std::string render_structure_spec( const StructureSpec& spec )
{
  auto bit = []( const std::optional<bool>& b ) { return b ? ( *b ? "1" : "0" ) : "?"; };
  std::ostringstream os;
  for ( const auto& layer : spec.layers )
  {
    os << "layer output=" << bit( layer.output ) << ":";
    for ( std::size_t i = 0; i < layer.members.size(); ++i )
    {
      os << ( i ? ", " : " " ) << "x" << layer.members[i].var << "=" << bit( layer.members[i].input );
    }
    os << "\n";
  }
  return os.str();
}

} // namespace canalyze
