#include <iostream>

#include "fixclip/cli.hpp"

int main(int argc, char** argv) { return fixclip::run_cli(argc, argv, std::cout, std::cerr); }
