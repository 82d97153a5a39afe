#include <iostream>
#include <string>
#include <vector>

#include "lmdi/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return lmdi::cli::run(args, std::cout, std::cerr);
}
