#include <asymptotika/cli.hpp>

int main(int argc, char** argv) { return asymptotika::cli::run(argc, argv); }
