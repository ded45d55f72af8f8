#include "riccisol/cli.hpp"

int main(int argc, char** argv) { return riccisol::cli_main(argc, argv); }
