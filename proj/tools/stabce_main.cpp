#include <iostream>
#include <string>
#include <vector>

#include "stabce/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return stabce::cli::run(args, std::cout, std::cerr);
}
