#include <iostream>

#include "qmeur/cli.hpp"

int main(int argc, char** argv) { return qmeur::run_cli(argc, argv, std::cout, std::cerr); }
