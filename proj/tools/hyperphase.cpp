#include "hyperphase/cli.hpp"

int main(int argc, char** argv) { return hyperphase::run(argc, argv); }
