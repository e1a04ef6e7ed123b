#include <gammahom/cli.hpp>

#include <iostream>

auto main(int argc, char ** argv) -> int { return gammahom::run_cli(argc, argv, std::cout, std::cerr); }
