#include "dbl/cliapp.hpp"

int main(int argc, char** argv) { return dbl::run_cli(argc, argv); }
