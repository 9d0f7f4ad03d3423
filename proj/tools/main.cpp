#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
    return ged::cli::run_cli(argc, argv, std::cout, std::cerr);
}
