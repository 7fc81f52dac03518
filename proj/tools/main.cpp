#include "cli.hpp"

int main(int argc, char** argv) { return tworank::cli::run(argc, argv); }
