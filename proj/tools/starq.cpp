#include <iostream>

#include "starq/cli.hpp"

int main(int argc, char** argv) { return starq::cli::run(argc, argv, std::cout, std::cerr); }
