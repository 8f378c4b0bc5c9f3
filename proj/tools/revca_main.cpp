#include <iostream>
#include <string>
#include <vector>

#include "revca/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return revca::run_cli(args, std::cout, std::cerr);
}
