#include "affa/cli.hpp"

int main(int argc, char** argv) { return affa::run_cli(argc, argv); }
