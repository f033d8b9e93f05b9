#include "oplx/cli.hpp"

int main(int argc, char** argv) { return oplx::cli::run(argc, argv); }
