#include <iostream>

#include "pseudoknot/cli.hpp"

int main(int argc, char** argv) { return pk::run(argc, argv, std::cout, std::cerr); }
