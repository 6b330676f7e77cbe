#include <iostream>

#include "cotree.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return cotree::run_command(args, std::cout, std::cerr);
}
