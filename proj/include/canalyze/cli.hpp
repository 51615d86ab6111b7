/*!
  \file cli.hpp
  \brief Command-line front end

  Subcommands: analyze, dnf, ncf-check, enumerate, generate, bench.
  Exit status 0 on success, 1 for parse and usage errors, 2 when the input
  violates a precondition of the requested operation (e.g. dnf on a
  function that is not nested canalizing).
*/

#pragma once

#include <iosfwd>
#include <string>

#include "canalyze/layers.hpp"

namespace canalyze
{

/*! \brief One JSON object with keys n, depth, num_layers, layer_vector, layers, core, fictitious, is_ncf */
std::string decomposition_json( const LayerDecomposition& d );

/*! \brief Line-oriented human-readable rendering of the same fields */
std::string decomposition_text( const LayerDecomposition& d );

int run_cli( int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err );

} // namespace canalyze
