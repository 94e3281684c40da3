#include <iostream>

#include "ahscatter/cli/commands.hpp"

int main(int argc, char** argv) { return ahscatter::cli::run(argc, argv, std::cout, std::cerr); }
