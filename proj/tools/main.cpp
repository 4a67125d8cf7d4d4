#include <iostream>
#include <vector>

#include "eqindex/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return eqindex::cli::run(std::move(args), std::cout, std::cerr);
}
