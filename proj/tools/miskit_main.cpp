#include "miskit/cli.hpp"

#include <iostream>
#include <vector>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return miskit::cli::run(args, std::cin, std::cout, std::cerr);
}
