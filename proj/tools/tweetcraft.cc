#include <iostream>

#include "tweetcraft/cli/commands.h"

int main(int argc, char** argv) { return tweetcraft::cli::run_cli(argc, argv, std::cout, std::cerr); }
