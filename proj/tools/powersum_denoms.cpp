#include <iostream>

#include "psd/cli.hpp"

int main(int argc, char** argv) { return psd::cli::run(argc, argv, std::cout, std::cerr); }
