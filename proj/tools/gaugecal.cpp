#include <gaugecal/cli.hpp>

#include <iostream>

int main(int argc, char** argv) { return gaugecal::cli::run(argc, argv, std::cout, std::cerr); }
