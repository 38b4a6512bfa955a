#include <iostream>

#include "vsl/cli.hpp"

int main(int argc, char** argv) { return vsl::run(argc, argv, std::cout, std::cerr); }
