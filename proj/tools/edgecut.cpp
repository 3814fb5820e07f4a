#include <iostream>
#include <string>
#include <vector>

#include "edgecut/commands.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return edgecut::run_cli(args, std::cout, std::cerr);
}
