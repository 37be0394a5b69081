#include <iostream>

#include "weylcoh/cli.hpp"

int main(int argc, char** argv) { return weylcoh::run_cli(argc, argv, std::cout, std::cerr); }
