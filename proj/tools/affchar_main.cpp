#include "affchar/cli.hpp"

#include <iostream>

int main(int argc, char **argv)
{
	return affchar::run_cli(argc, argv, std::cout, std::cerr);
}
