#include <iostream>

#include "tubealg/cli.hpp"

int main(int argc, char** argv) { return tubealg::cli_dispatch(argc, argv, std::cout, std::cerr); }
