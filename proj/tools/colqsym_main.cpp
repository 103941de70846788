#include "colqsym/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return colqsym::run(argc, argv, std::cout, std::cerr); }
