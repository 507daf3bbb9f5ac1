#include <iostream>

#include "qwalk/app/cli.hpp"

int main(int argc, char** argv) { return qwalk::app::run_cli(argc, argv, std::cerr); }
