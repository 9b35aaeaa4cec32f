#include "nw/commands.hpp"

#include <iostream>

int main(int argc, char** argv) { return nw::run_cli(argc, argv, std::cout, std::cerr); }
