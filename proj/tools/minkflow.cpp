#include "minkflow/cli.hpp"

int main(int argc, char** argv) { return minkflow::cli::main(argc, argv); }
