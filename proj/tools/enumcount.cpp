#include <iostream>
#include <string>
#include <vector>

#include "enumcount/cli.hpp"

int main(int argc, char** argv) {
    std::ios::sync_with_stdio(false);
    const std::vector<std::string> args(argv, argv + argc);
    return enumcount::cli::main_entry(args, std::cout, std::cerr);
}
