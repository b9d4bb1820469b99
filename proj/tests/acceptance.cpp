// Runs the numbered acceptance checks and prints one line per check.
#include <cstdio>
#include <cstdlib>
#include <string>

#include "sqt/error.hpp"
#include "sqt/experiments.hpp"

int main(int argc, char** argv) {
    sqt::ExperimentConfig cfg;
    try {
        cfg = sqt::load_config(argc > 1 ? argv[1] : "");
    } catch (const sqt::Error& e) {
        std::fprintf(stderr, "config: %s\n", e.what());
        return 4;
    }
    int failed = 0;
    for (int id = 1; id <= 11; ++id) {
        const auto r = sqt::run_check(id, cfg);
        std::printf("%s %2d %s (%.0f ms): %s\n", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(), r.ms, r.detail.c_str());
        std::fflush(stdout);
        failed += !r.pass;
    }
    std::printf("%d/11 passed\n", 11 - failed);
    return failed ? 2 : 0;
}
