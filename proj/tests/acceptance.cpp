#include "liecohom/regression.hpp"

#include <cstring>
#include <iostream>

int main(int argc, char** argv) {
    bool verbose = argc > 1 && std::strcmp(argv[1], "-v") == 0;
    int failed = 0;
    for (const auto& c : lc::run_regression()) {
        std::cout << lc::format_criterion(c, verbose);
        if (!c.passed()) ++failed;
    }
    std::cout << (failed ? "FAILED: " + std::to_string(failed) + " criteria\n" : std::string("all criteria passed\n"));
    return failed ? 1 : 0;
}
