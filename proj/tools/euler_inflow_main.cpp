#include "euler/cli.h"

int main(int argc, char** argv) { return euler::run_cli(argc, argv); }
