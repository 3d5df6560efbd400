#include <iostream>

#include "tabcrystal/cli.hpp"

int main(int argc, char** argv) {
    return tabcrystal::cli::main(argc, argv, std::cout, std::cerr);
}
