#include <iostream>

#include "nilfilt_app/cli.hpp"

int main(int argc, char** argv) { return nilfilt::cli::run_cli(argc, argv, std::cout, std::cerr); }
