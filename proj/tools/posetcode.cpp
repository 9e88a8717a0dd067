#include "cli.hpp"

int main(int argc, char** argv) { return posetcode::cli::run(argc, argv); }
