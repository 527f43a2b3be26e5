#include "clifford_cli/app.hpp"

int main(int argc, char** argv) { return clifford::cli::run_app(argc, argv); }
