#include <iostream>

#include "compound_cli.hpp"

int main(int argc, char** argv) { return compound::cli::run(argc, argv, std::cout, std::cerr); }
