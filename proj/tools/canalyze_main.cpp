#include <iostream>

#include "canalyze/cli.hpp"

int main( int argc, char** argv )
{
  return canalyze::run_cli( argc, argv, std::cin, std::cout, std::cerr );
}
