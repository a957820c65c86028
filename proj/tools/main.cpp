#include <iostream>

#include "chaincode/cli.hpp"

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv + 1, argv + argc);
    return chaincode::cli::dispatch(args, std::cin, std::cout, std::cerr);
}
