// One line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "curalg/suites.hpp"

int main(int argc, char** argv) {
    using namespace curalg;
    int first = 1, last = kCriteria;
    if (argc > 1) first = last = std::atoi(argv[1]);
    bool ok = true;
    for (int n = first; n <= last; ++n) {
        const auto t0 = std::chrono::steady_clock::now();
        const Criterion c = run_criterion(n);
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("[%s] %d. %s (%.2f s)\n", c.pass() ? "PASS" : "FAIL", c.number, c.title.c_str(), secs);
        if (!c.pass()) {
            ok = false;
            for (const auto& s : c.suites)
                for (const auto& cs : s.cases)
                    if (!cs.pass)
                        std::printf("    %s/%s: %s: %s\n", s.suite.c_str(), s.algebra.c_str(), cs.name.c_str(),
                                    cs.detail.c_str());
        }
        std::fflush(stdout);
    }
    return ok ? 0 : 1;
}
