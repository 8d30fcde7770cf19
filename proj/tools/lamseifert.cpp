#include <iostream>

#include "lamseifert/cli.hpp"

int main(int argc, char** argv) { return lamseifert::cli::main(argc, argv, std::cout, std::cerr); }
