#include <iostream>

#include "tamagawa/cli.hpp"

int main(int argc, char** argv) { return tamagawa::cli_dispatch(argc, argv, std::cout, std::cerr); }
