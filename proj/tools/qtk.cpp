#include "qtk/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return qtk::run_cli(argc, argv, std::cout, std::cerr);
}
