#include <iostream>

#include "fracwave_cli.hpp"

int main(int argc, char** argv) {
    return fracwave::cli::run(argc, argv, std::cout, std::cerr);
}
