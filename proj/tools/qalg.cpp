#include <iostream>

#include "qalg/cli.hpp"

int main(int argc, char** argv)
{
    return qalg::cli::run(argc, argv, std::cout, std::cerr);
}
