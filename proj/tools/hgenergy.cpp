#include <iostream>
#include <string>
#include <vector>

#include "hgenergy/cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv, argv + argc);
    return hgenergy::run_cli(args, std::cin, std::cout, std::cerr);
}
