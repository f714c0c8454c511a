#include <iostream>
#include <string>
#include <vector>

#include "prefixcomp/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return prefixcomp::run_cli(args, std::cout, std::cerr);
}
