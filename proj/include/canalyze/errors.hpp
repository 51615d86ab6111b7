/*!
  \file errors.hpp
  \brief Exception types shared across the library
*/

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace canalyze
{

/*! \brief Malformed textual input; `position()` is the 0-based character offset */
class ParseError : public std::runtime_error
{
public:
  ParseError( const std::string& message, std::size_t position )
      : std::runtime_error( message + " at position " + std::to_string( position ) ), position_( position )
  {
  }

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

/*! \brief Well-formed input outside an operation's domain (e.g. a DNF request for a non-NCF) */
class DomainError : public std::domain_error
{
public:
  using std::domain_error::domain_error;
};

} // namespace canalyze
