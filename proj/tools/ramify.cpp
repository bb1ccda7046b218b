#include <iostream>

#include "ramify/cli.hpp"

int main(int argc, char **argv)
{
    return ramify::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
