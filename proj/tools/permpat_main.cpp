#include "permpat/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return permpat::cli::run(argc, argv, std::cout, std::cerr);
}
