#include <iostream>
#include <string>
#include <vector>

#include "sqkit/cli.h"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return sqkit::cli::run(std::move(args), std::cout, std::cerr);
}
