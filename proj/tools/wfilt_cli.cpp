#include <iostream>

#include "wfilt/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return wfilt::run(args, std::cout, std::cerr);
}
