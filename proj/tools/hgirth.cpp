#include <iostream>
#include <string>
#include <vector>

#include "hgirth/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return hgirth::cli::run(args, std::cout, std::cerr);
}
