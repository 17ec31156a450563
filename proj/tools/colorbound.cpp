#include <iostream>

#include "colorbound/cli.hpp"

int main(int argc, char **argv)
{
    return colorbound::cli::run(argc, argv, std::cout, std::cerr);
}
