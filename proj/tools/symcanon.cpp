#include "cli.hpp"

int main(int argc, char** argv) { return symcanon::cli::run(argc, argv); }
