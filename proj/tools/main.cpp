#include <iostream>

#include "qpa/cli.hpp"

int main(int argc, char** argv) { return qpa::run(argc, argv, std::cout, std::cerr); }
