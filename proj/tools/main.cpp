#include <cyclodet/cli.hpp>

#include <iostream>

int main(int argc, char** argv) { return cyclodet::cli::run_cli(argc, argv, std::cout, std::cerr); }
