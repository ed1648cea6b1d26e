// Acceptance run: one PASS/FAIL line per criterion, failing rows listed below it.

#include "osprep.hpp"

#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <string>
#include <vector>

using namespace osprep;

namespace {

struct Criterion {
    int id;
    std::string name;
    std::function<SuiteMatrix()> run;
};

}  // namespace

int main(int argc, char** argv) {
    bool verbose = argc > 1 && std::strcmp(argv[1], "--verbose") == 0;
    const int depth = 6;
    ProductLog log;
    const auto& G = acceptance_grid();

    std::vector<FactorCase> t4;
    for (Context c : {Context{1, 1}, Context{2, 1}, Context{2, 2}, Context{3, 1}, Context{4, 2}, Context{5, 1}})
        for (int k = 1; k <= 3; ++k) t4.push_back({c, k});

    std::vector<Criterion> criteria{
        {1, "algebra validation", [&] { return algebra_matrix(G); }},
        {2, "spinor realization", [&] { return spinor_matrix(G, 8); }},
        {3, "odd reflections", [&] { return reflection_matrix(G, 50); }},
        {4, "primitive plus lowerable identity", [&] { return theorem4_matrix(t4, depth, &log); }},
        {5, "spinor times k eps_1: closed form vs brute force", [&] { return theorem8_matrix(G, 3, depth, &log); }},
        {6, "exceptional chains", [&] { return theorem9_matrix(theorem9_cases(), depth, &log); }},
        {7, "Casimir separation table", [&] { return lemma3_matrix(20); }},
        {8, "spinor times K_mu: closed forms vs brute force",
         [&] { return theorem10_matrix({Context{3, 1}, Context{5, 1}, Context{4, 1}}, 4, depth, &log); }},
        {9, "primitive dimension and candidate audit", [&] { return primitive_audit_matrix(log); }},
        {10, "weight multiplicity bound", [&] { return weight_bound_matrix(log, depth); }},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        SuiteMatrix m;
        std::string error;
        try {
            m = c.run();
        } catch (const std::exception& e) {
            error = e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool ok = error.empty() && m.pass();
        if (!ok) ++failed;
        std::printf("%s  criterion %2d  %-50s rows=%zu failed=%zu  (%.1fs)\n", ok ? "PASS" : "FAIL", c.id, c.name.c_str(), m.rows.size(),
                    m.failures(), secs);
        if (!error.empty()) std::printf("      error: %s\n", error.c_str());
        for (const auto& r : m.rows)
            if (verbose || !r.pass)
                std::printf("      %s %s%s%s\n", r.pass ? "ok  " : "FAIL", r.label.c_str(), r.detail.empty() ? "" : "  -- ", r.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
