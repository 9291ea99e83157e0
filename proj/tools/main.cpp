#include "sweedler/cli.hpp"

int main(int argc, char** argv) { return sweedler::cli_main(argc, argv); }
