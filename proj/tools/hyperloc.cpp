#include <iostream>

#include <hyperloc/cli.hpp>

int main(int argc, char **argv)
{
    return hyperloc::run(argc, argv, std::cout, std::cerr);
}
