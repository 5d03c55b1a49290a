#include <iostream>
#include <string>
#include <vector>

#include "jkl/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return jkl::cli_run(std::move(args), std::cout, std::cerr);
}
