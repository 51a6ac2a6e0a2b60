#include <iostream>

#include "mckay/cli.hpp"

int main(int argc, char** argv) {
    return mckay::run_cli(argc, argv, std::cout, std::cerr);
}
