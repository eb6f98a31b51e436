#include "floercone/cli.hpp"

int main(int argc, char** argv) { return floercone::cli_main(argc, argv); }
