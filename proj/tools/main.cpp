#include "torustour/cli.hpp"

int main(int argc, char** argv) { return torustour::cli::run(argc, argv); }
