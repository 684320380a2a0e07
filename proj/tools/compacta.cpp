#include <iostream>

#include "compacta_cli.hpp"

int main(int argc, char** argv) { return compacta::cli::run(argc, argv, std::cout, std::cerr); }
