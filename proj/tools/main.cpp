#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "pythia/checked.hpp"

int main(int argc, char** argv) {
    if (const char* width = std::getenv("PYTHIA_MAX_WIDTH")) {
        try {
            pythia::set_max_width(
                static_cast<unsigned>(std::stoul(width)));
        } catch (const std::exception& e) {
            std::cerr << "PYTHIA_MAX_WIDTH: " << e.what() << '\n';
            return 1;
        }
    }
    std::vector<std::string> args(argv + 1, argv + argc);
    return pythia::cli::run(args, std::cout, std::cerr);
}
