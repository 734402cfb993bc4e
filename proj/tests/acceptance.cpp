// One line per acceptance criterion; exit status 0 iff every check holds within its time limit.

#include "dtd/verify.hpp"

#include <cstdio>
#include <cstdlib>
#include <functional>
#include <thread>

using namespace dtd;

namespace {

struct Criterion {
    double limit;  // seconds
    std::function<CheckResult(int)> run;
};

int workers() {
    if (const char* e = std::getenv("DTD_WORKERS")) return std::max(1, std::atoi(e));
    return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace

int main() {
    const Criterion all[] = {
        {1, [](int) { return check_golden_matrices(); }},
        {60, [](int w) { return check_matrix_bridge(4, 4, w); }},
        {60, [](int) { return check_ddu_count(); }},
        {300, [](int w) { return check_type_d_vs_b(5, w); }},
        {300, [](int w) { return check_p_mn(6, w); }},
        {10, [](int w) { return check_kenyon_wilson(4, w); }},
        {120, [](int w) { return check_q_b(5, w); }},
        {120, [](int w) { return check_omega(5, w); }},
        {300, [](int w) { return check_tiles_statistic(5, w); }},
        {1, [](int) { return check_area_remark(); }},
        {120, [](int w) { return check_positivity(6, w); }},
        {600, [](int w) { return check_structure(StructureSizes{}, w); }},
    };
    const int w = workers();
    int failed = 0;
    for (auto& c : all) {
        auto r = c.run(w);
        const bool ok = r.pass && r.seconds <= c.limit;
        failed += !ok;
        std::printf("%s  %2d  %-22s %8ld cases  %8.3f s (limit %g s)  %s\n", ok ? "PASS" : "FAIL", r.number,
                    r.name.c_str(), r.cases, r.seconds, c.limit, r.description.c_str());
        for (auto& f : r.failures) std::printf("          %s\n", f.c_str());
        if (r.pass && !ok) std::printf("          over the time limit\n");
        std::fflush(stdout);
    }
    std::printf("%d/12 criteria passed\n", 12 - failed);
    return failed ? 1 : 0;
}
