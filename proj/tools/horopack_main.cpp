#include "horopack/report.hpp"

int main(int argc, char** argv) { return horo::run_cli(argc, argv); }
