#include <iostream>

#include "autseq/cli.hpp"

int main(int argc, char** argv) { return autseq::run_cli(argc, argv, std::cout, std::cerr); }
