#include "cli.hpp"

int main(int argc, char** argv) { return charvar::cli_main(argc, argv); }
