#include <iostream>
#include <string>
#include <vector>

#include "entdyn/cli.hpp"

int main(int argc, char **argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return entdyn::run_cli(args, std::cout, std::cerr);
}
