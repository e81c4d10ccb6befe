#include "mapenum/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return mapenum::cli::run(argc, argv, std::cout, std::cerr); }
