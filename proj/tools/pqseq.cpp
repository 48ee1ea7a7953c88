#include <iostream>

#include "pqseq/cli.hpp"

int main(int argc, char** argv) { return pqseq::cli_main(argc, argv, std::cout, std::cerr); }
