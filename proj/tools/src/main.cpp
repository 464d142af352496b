#include <iostream>

#include "spanvk_cli/cli.hpp"

int main(int argc, char** argv) { return spanvk::cli::run(argc, argv, std::cout, std::cerr); }
