#include <iostream>

#include "lieinv/cli.hpp"

int main(int argc, char** argv)
{
    return lieinv::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
