/*!
  \file parse.hpp
  \brief Textual formats for Boolean functions and canalizing structures

  Three function formats are understood:

    anf    x1*x2 + x1 + 1      terms joined by '+' (or '-'); '*' is mandatory
    logic  x1 & (x2 | !x3)     '!' or '~', then '&', then '|'; constants 0 and 1
    table  00000111            2^n binary digits, row 0 first

  Variables are written x1, x2, ...; the variable count is the largest index
  unless an explicit count is supplied.
*/

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "canalyze/anf.hpp"
#include "canalyze/errors.hpp"
#include "canalyze/reveng.hpp"
#include "canalyze/truth_table.hpp"

namespace canalyze
{

enum class Format
{
  anf,
  logic,
  table
};

/*! \brief "anf", "logic" or "table"; throws std::invalid_argument otherwise */
Format parse_format( std::string_view name );

AnfPolynomial parse_anf( std::string_view text, std::optional<unsigned> num_vars = std::nullopt );
TruthTable parse_logic( std::string_view text, std::optional<unsigned> num_vars = std::nullopt );
TruthTable parse_table( std::string_view text );

/*! \brief Monomials by decreasing degree, e.g. "x1*x2 + x1 + 1"; "0" for the zero polynomial */
std::string render_anf( const AnfPolynomial& p );

struct FunctionSource
{
  std::optional<std::string> name;
  Format format;
  std::string body;
};

/*! \brief One function per non-blank line, optionally prefixed by "name:"; '#' starts a comment */
std::vector<FunctionSource> split_function_lines( std::string_view text, Format format );

TruthTable to_truth_table( const FunctionSource& source, std::optional<unsigned> num_vars = std::nullopt );

/*! \brief Structure file: one line per layer, in order

    layer output=1: x1=1, x2=1
    layer output=?: x3=?, x4=0
*/
StructureSpec parse_structure_spec( std::string_view text );

std::string render_structure_spec( const StructureSpec& spec );

} // namespace canalyze
