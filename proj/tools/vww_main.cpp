#include "vww/cli.hpp"

int main(int argc, char** argv) { return vww::cli_main(argc, argv); }
