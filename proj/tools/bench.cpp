#include "saddle/cli.hpp"

int main(int argc, char** argv) { return saddle::bench::cli_main(argc, argv); }
