#include "augcube/cli.hpp"

int main(int argc, char** argv) { return augcube::cli::run(argc, argv); }
