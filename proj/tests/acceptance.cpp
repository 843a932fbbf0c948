// Runs the numbered acceptance criteria and prints one PASS/FAIL line per criterion.
#include "fsm/verify.hpp"

#include <cstdio>
#include <cstdlib>
#include <string>

int main(int argc, char** argv)
{
    fsm::VerifyOptions opts;
    bool verbose = false;
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        std::string a = argv[i];
        if (a == "-v" || a == "--verbose")
            verbose = true;
        else if (a == "--only" && i + 1 < argc)
            only = std::atoi(argv[++i]);
        else {
            std::fprintf(stderr, "usage: %s [--verbose] [--only N]\n", argv[0]);
            return 2;
        }
    }
    fsm::Workspace ws(opts.q_max);
    int failed = 0;
    for (int id = 1; id <= fsm::criterion_count; ++id) {
        if (only && id != only)
            continue;
        fsm::CriterionResult r = fsm::run_criterion(id, ws, opts);
        std::printf("criterion %2d %-45s %s  (%.2f s, budget %.0f s)\n", id, r.title.c_str(), r.pass ? "PASS" : "FAIL",
                    r.seconds, r.budget_seconds);
        for (const auto& c : r.checks)
            if (verbose || !c.pass)
                std::printf("    [%s] %s: %s\n", c.pass ? "ok" : "FAILED", c.name.c_str(), c.detail.c_str());
        if (verbose)
            for (const auto& n : r.notes)
                std::printf("    note: %s\n", n.c_str());
        std::fflush(stdout);
        if (!r.pass)
            ++failed;
    }
    std::printf("%d criteria failed\n", failed);
    return failed ? 1 : 0;
}
