#include <iostream>
#include <string>
#include <vector>

#include "cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    farey::cli::RunResult r = farey::cli::run(args);
    std::cout << r.out;
    std::cerr << r.err;
    return r.status;
}
