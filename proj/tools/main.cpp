#include <iostream>

#include "cornerwalk/cli.hpp"

int main(int argc, char** argv) { return cornerwalk::cli::run(argc, argv, std::cout, std::cerr); }
