#include <iostream>
#include <span>

#include "sliplab/cli.hpp"

int main(int argc, char** argv) {
    return sliplab::cli_main(std::span<const char* const>(argv, static_cast<std::size_t>(argc)),
                             std::cout, std::cerr);
}
