#include <iostream>

#include "colorfact/cli.hpp"

int main(int argc, char** argv) { return colorfact::cli::run(argc, argv, std::cout, std::cerr); }
