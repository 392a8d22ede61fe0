#include <iostream>

#include "grayiso/cli.hpp"

int main(int argc, char** argv) {
    return grayiso::cli::run(argc, argv, std::cout, std::cerr);
}
