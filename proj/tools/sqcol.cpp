#include "sqcol_cli.hpp"

int main(int argc, char** argv) { return sqcol::cli::run(argc, argv, std::cout, std::cerr); }
