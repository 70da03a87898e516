#include "dhopf/cli.hpp"

int main(int argc, char** argv) { return dhopf::run(argc, argv); }
