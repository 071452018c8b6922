#include "netctrl/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return netctrl::cli::run(argc, argv, std::cout, std::cerr); }
