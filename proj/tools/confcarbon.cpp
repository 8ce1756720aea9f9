#include "confcarbon/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return confcarbon::cli::run(argc, argv, std::cout, std::cerr);
}
