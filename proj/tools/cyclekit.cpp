#include <iostream>
#include <string>
#include <vector>

#include "cycles/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    cycles::cli::RunResult r = cycles::cli::run(args);
    std::cout << r.output;
    return r.exit_code;
}
