#include <iostream>

#include "mcc/cli.hpp"

int main(int argc, char** argv) { return mcc::cli::main(argc, argv, std::cout, std::cerr); }
