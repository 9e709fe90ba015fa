#include <iostream>

#include "nererr_cli.hpp"

int main(int argc, char** argv) { return nererr::cli::run(argc, argv, std::cout, std::cerr); }
