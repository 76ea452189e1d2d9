#include <iostream>

#include "seedcast/cli.hpp"

int main(int argc, char** argv) {
    return seedcast::cli_main(argc, argv, std::cout, std::cerr);
}
