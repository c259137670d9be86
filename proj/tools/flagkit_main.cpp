#include <iostream>
#include <string>
#include <vector>

#include "flagkit/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return flagkit::cli_main(args, std::cout, std::cerr);
}
