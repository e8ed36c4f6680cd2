#include "tlg/harness/cli.hpp"

int main(int argc, char** argv) { return tlg::cli_main(argc, argv); }
