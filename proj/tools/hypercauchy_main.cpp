#include "hypercauchy/cli.hpp"

int main(int argc, char** argv) { return hypercauchy::cli::main_entry(argc, argv); }
