#include "cli/app.hpp"

int main(int argc, char** argv) { return cgauge::cli::run(argc, argv); }
