#include "superalg/cli.hpp"

int main(int argc, char** argv) { return sa::cli::main_entry(argc, argv); }
