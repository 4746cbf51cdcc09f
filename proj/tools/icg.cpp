#include <iostream>
#include <string>
#include <vector>

#include "icg/cli.hpp"

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv, argv + argc);
    return icg::cli::run(args, std::cout, std::cerr);
}
