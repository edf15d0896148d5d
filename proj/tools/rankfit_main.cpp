#include <iostream>

#include "rankfit/cli.hpp"

int main(int argc, char** argv) { return rankfit::cli::run(argc, argv, std::cout, std::cerr); }
