#include "cli.hpp"

int main(int argc, char** argv) { return evenpoint::cli::run(argc, argv); }
