#include "netsort/cli.hpp"

int main(int argc, char** argv) { return netsort::run_cli(argc, argv); }
