#include <iostream>
#include <string>
#include <vector>

#include "qhgrass/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return qhgrass::run_cli(args, std::cout, std::cerr);
}
