#include <iostream>

#include "lcklab/cli.hpp"

int main(int argc, char** argv) { return lcklab::run_cli(argc, argv, std::cout, std::cerr); }
