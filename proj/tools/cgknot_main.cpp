#include <iostream>
#include <vector>

#include "cgknot/cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return cgknot::run(args, std::cout, std::cerr);
}
