#include "gks/cli.hpp"

int main(int argc, char** argv) { return gks::cli_main(argc, argv); }
