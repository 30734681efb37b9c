#include <iostream>

#include "equipart/cli.hpp"

int main(int argc, char** argv) {
    return equipart::cli::main_entry(argc, argv, std::cout, std::cerr);
}
