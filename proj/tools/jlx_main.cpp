#include <iostream>

#include "jlx/cli.hpp"

int main(int argc, char** argv) {
    return jlx::cli::run(argc, argv, std::cout, std::cerr);
}
