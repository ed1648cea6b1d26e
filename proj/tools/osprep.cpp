// osprep: weights, spinor modules and tensor product decompositions of osp(m|2n).

#include "osprep/decomp.hpp"
#include "osprep/json_io.hpp"
#include "osprep/suites.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

using namespace osprep;

namespace {

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct RunConfig {
    int m = 1;
    int n = 1;
    int depth = 6;
    std::string part = "default";
    std::string convention = "nonstandard";
    std::string format = "json";
    std::string weight;
    std::string to = "standard";
    std::string method = "closed";
    std::string suite;
    int degree = 8;
};

Context context_of(const RunConfig& cfg) {
    Context c{cfg.m, cfg.n};
    try {
        validate_context(c);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    if (cfg.depth < 0) throw UsageError("--depth must be >= 0");
    return c;
}

Part part_of(const RunConfig& cfg, Context c) {
    if (cfg.part == "default") return c.m_odd() ? Part::all : Part::plus;
    if (cfg.part == "all") return Part::all;
    if (c.m_odd()) throw UsageError("--part plus|minus needs even m; osp(" + std::to_string(c.m) + "|" + std::to_string(2 * c.n) + ") has one spinor module");
    return cfg.part == "plus" ? Part::plus : Part::minus;
}

Convention convention_of(const RunConfig& cfg) { return cfg.convention == "standard" ? Convention::standard : Convention::nonstandard; }

Weight weight_arg(const RunConfig& cfg, Context c, const char* flag) {
    if (cfg.weight.empty()) throw UsageError(std::string(flag) + " is required");
    try {
        return weight_from_json(cfg.weight, c);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

/// Highest weight in eps - delta labels, converting from standard labels when asked.
Weight nonstandard_hw(const RunConfig& cfg, Context c, const char* flag) {
    Weight w = weight_arg(cfg, c, flag);
    return convention_of(cfg) == Convention::standard ? to_nonstandard(w) : w;
}

void print(const Json& j) { std::cout << j.dump(2) << "\n"; }

bool is_nu(const Weight& w, int& k) {
    const Context& c = w.context();
    for (k = 1; k <= c.n; ++k)
        if (w == nu(k, c)) return true;
    return false;
}

bool is_ke1(const Weight& w, int& k) {
    const Context& c = w.context();
    if (c.d() == 0) return is_nu(w, k);
    const Rational& x = w.k(1);
    if (!x.is_integer() || x.sign() <= 0) return false;
    k = static_cast<int>(x.to_long());
    return w == Rational(k) * Weight::eps_unit(c, 1);
}

DecompositionResult closed_decompose(const Weight& hw, Part part) {
    const Context& c = hw.context();
    int k = 0;
    if (hw.is_zero()) return spinor_itself(c, part);
    if (is_ke1(hw, k)) return spinor_times_ke1(c, k, part);
    try {
        return theorem11_decompose(hw, part);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("no closed form for K") + hw.str() + " on " + ctx_label(c) +
                         ": supported are k eps_1 (nu_k for m = 1) and sum (k_j + n) eps_j with k_j >= 1 (" + e.what() + ")");
    }
}

void print_matrix_text(const SuiteMatrix& m) {
    for (const auto& r : m.rows)
        std::printf("%s %s%s%s\n", r.pass ? "ok  " : "FAIL", r.label.c_str(), r.detail.empty() ? "" : "  -- ", r.detail.c_str());
    std::printf("%s: %zu of %zu rows pass\n", m.suite.c_str(), m.rows.size() - m.failures(), m.rows.size());
}

Json matrix_json(const SuiteMatrix& m) {
    Json rows = Json::array();
    for (const auto& r : m.rows) {
        Json x{{"label", r.label}, {"pass", r.pass}};
        if (!r.detail.empty()) x["detail"] = r.detail;
        rows.push_back(x);
    }
    return Json{{"suite", m.suite}, {"pass", m.pass()}, {"failed", m.failures()}, {"rows", rows}};
}

int cmd_validate(const RunConfig& cfg) {
    Context c = context_of(cfg);
    auto a = algebra_suite(c);
    auto s = spinor_suite(c, cfg.degree);
    bool ok = a.pass() && s.pass();
    if (cfg.format == "text") {
        for (const auto* r : {&a, &s})
            for (const auto& f : r->families)
                std::printf("%s %s %s checked=%zu failed=%zu%s%s\n", f.pass() ? "ok  " : "FAIL", r->suite.c_str(), f.name.c_str(), f.checked,
                            f.failed, f.first_failure.empty() ? "" : "  first: ", f.first_failure.c_str());
    } else {
        print(Json{{"m", c.m}, {"n", c.n}, {"pass", ok}, {"reports", Json::array({to_json(a), to_json(s)})}});
    }
    return ok ? 0 : 1;
}

int cmd_reflect(const RunConfig& cfg) {
    Context c = context_of(cfg);
    Weight w = weight_arg(cfg, c, "--weight");
    Weight ns = cfg.to == "standard" ? w : to_nonstandard(w);
    Weight st = cfg.to == "standard" ? to_standard(w) : w;
    Json seq = Json::array();
    for (const auto& r : odd_reflection_sequence(c)) seq.push_back(to_json(r.weight));
    print(Json{{"m", c.m}, {"n", c.n}, {"to", cfg.to}, {"result", to_json(cfg.to == "standard" ? st : ns)}, {"nonstandard", to_json(ns)},
               {"standard", to_json(st)}, {"reflections", seq}});
    return 0;
}

int cmd_spinor(const RunConfig& cfg) {
    Context c = context_of(cfg);
    Part p = part_of(cfg, c);
    Json mons = Json::array();
    for (const auto& mon : basis_up_to(c, cfg.depth, p)) {
        Json theta = Json::array(), t = Json::array();
        for (auto g : mon.gamma) theta.push_back(static_cast<int>(g));
        for (auto b : mon.beta) t.push_back(b);
        mons.push_back({{"monomial", mon.str()}, {"theta", theta}, {"t", t}, {"degree", mon.degree()}, {"weight", to_json(weight_of(mon, c))}});
    }
    print(Json{{"m", c.m}, {"n", c.n}, {"part", to_string(p)}, {"depth", cfg.depth}, {"highest_weight", to_json(spinor_highest_weight(c, p))},
               {"monomials", mons}});
    return 0;
}

int cmd_module(const RunConfig& cfg) {
    Context c = context_of(cfg);
    Weight hw = weight_arg(cfg, c, "--hw");
    IrreducibleModule M(hw, convention_of(cfg), cfg.depth);
    if (cfg.format == "text") {
        std::printf("L%s (%s labels) depth %d%s\n", hw.str().c_str(), cfg.convention.c_str(), cfg.depth, M.closed() ? " closed" : "");
        for (const auto& sp : M.spaces()) std::printf("%4d  %-40s %zu\n", sp.height, sp.weight.str().c_str(), sp.dim);
        std::printf("total %zu\n", M.total_dim());
        return 0;
    }
    Json rows = Json::array();
    for (const auto& sp : M.spaces()) rows.push_back({{"weight", to_json(sp.weight)}, {"height", sp.height}, {"dim", sp.dim}});
    Json out{{"m", c.m}, {"n", c.n}, {"convention", cfg.convention}, {"highest_weight", to_json(hw)}, {"depth", cfg.depth},
             {"closed", M.closed()}, {"total_dim", M.total_dim()}, {"weights", rows}};
    if (M.closing_height()) out["closing_height"] = *M.closing_height();
    print(out);
    return 0;
}

int cmd_candidates(const RunConfig& cfg) {
    Context c = context_of(cfg);
    Part p = part_of(cfg, c);
    Weight hw = nonstandard_hw(cfg, c, "--hw");
    Json rows = Json::array();
    for (const auto& x : candidates(hw, p)) rows.push_back({{"weight", to_json(x.weight)}, {"mu", to_json(x.mu)}, {"shift", x.shift}});
    print(Json{{"m", c.m}, {"n", c.n}, {"part", to_string(p)}, {"highest_weight", to_json(hw)}, {"candidates", rows}});
    return 0;
}

void print_result_text(const DecompositionResult& r) {
    std::printf("%s %s\n", ctx_label(r.ctx).c_str(), to_string(r.shape));
    for (const auto& s : r.summands)
        std::printf("  K%s  (standard L%s)%s\n", s.nonstandard.str().c_str(), s.standard.str().c_str(),
                    s.multiplicity > 1 ? (" x" + std::to_string(s.multiplicity)).c_str() : "");
    if (r.chain) {
        std::printf("  upper K%s, inner K%s\n", r.chain->upper.str().c_str(), r.chain->inner.str().c_str());
        for (const auto& note : r.chain->notes) std::printf("  note: %s\n", note.c_str());
    }
}

int cmd_decompose(const RunConfig& cfg) {
    Context c = context_of(cfg);
    Part p = part_of(cfg, c);
    Weight hw = nonstandard_hw(cfg, c, "--hw");
    if (cfg.method == "closed") {
        auto r = closed_decompose(hw, p);
        if (cfg.format == "text")
            print_result_text(r);
        else
            print(to_json(r));
        return 0;
    }
    auto K = finite_module(hw, Convention::nonstandard);
    TensorProduct W(c, p, K);
    for (const auto& x : candidates(hw, p)) {
        auto h = W.depth_of(x.weight);
        if (h && *h >= cfg.depth) {
            std::cerr << "warning: candidate " << x.weight.str() << " sits at depth " << *h << ", on or beyond the window of depth " << cfg.depth
                      << "\n";
        }
    }
    auto rep = brute_force_decompose(W, cfg.depth);
    if (cfg.format == "text") {
        print_result_text(rep.result);
        for (const auto& q : rep.primitives) std::printf("  primitive %s depth %ld dim %zu\n", q.weight.str().c_str(), q.depth, q.vectors.size());
    } else {
        print(to_json(rep));
    }
    return 0;
}

int cmd_casimir(const RunConfig& cfg) {
    Context c = context_of(cfg);
    Weight w = weight_arg(cfg, c, "--weight");
    Weight st = convention_of(cfg) == Convention::standard ? w : to_standard(w);
    print(Json{{"m", c.m}, {"n", c.n}, {"standard", to_json(st)}, {"rho", to_json(rho(c))}, {"casimir", casimir_eigenvalue(st).str()}});
    return 0;
}

int cmd_check(const RunConfig& cfg, bool restrict_grid) {
    std::vector<Context> grid = acceptance_grid();
    if (restrict_grid) grid = {context_of(cfg)};
    SuiteMatrix m;
    if (cfg.suite == "lemma3") {
        m = lemma3_matrix(20);
    } else if (cfg.suite == "theorem8") {
        m = theorem8_matrix(grid, 3, cfg.depth);
    } else if (cfg.suite == "theorem9") {
        auto cases = theorem9_cases();
        if (restrict_grid) std::erase_if(cases, [&](const ChainCase& x) { return !(x.ctx == grid.front()); });
        if (cases.empty()) throw UsageError("theorem9: no exceptional case listed for " + ctx_label(grid.front()));
        m = theorem9_matrix(cases, cfg.depth);
    } else {
        if (!restrict_grid) grid = {Context{3, 1}, Context{5, 1}, Context{4, 1}};
        m = theorem10_matrix(grid, 4, cfg.depth);
    }
    if (cfg.format == "json")
        print(matrix_json(m));
    else
        print_matrix_text(m);
    return m.pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spinor representations of osp(m|2n) and their tensor products, in exact arithmetic"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto add_context = [&](CLI::App* s) {
        s->add_option("--m", cfg.m, "m in osp(m|2n)")->required()->check(CLI::PositiveNumber);
        s->add_option("--n", cfg.n, "n in osp(m|2n)")->required()->check(CLI::NonNegativeNumber);
    };
    auto add_format = [&](CLI::App* s) { s->add_option("--format", cfg.format, "json or text")->check(CLI::IsMember({"json", "text"})); };
    auto add_part = [&](CLI::App* s) {
        s->add_option("--part", cfg.part, "spinor part: plus, minus (even m) or all")->check(CLI::IsMember({"plus", "minus", "all"}));
    };
    auto add_convention = [&](CLI::App* s) {
        s->add_option("--convention", cfg.convention, "labels of the given weight")->check(CLI::IsMember({"nonstandard", "standard"}));
    };
    auto add_depth = [&](CLI::App* s) { s->add_option("--depth", cfg.depth, "truncation depth")->check(CLI::NonNegativeNumber); };

    auto* validate = app.add_subcommand("validate", "relation suites for the matrix and spinor realizations");
    add_context(validate);
    add_format(validate);
    validate->add_option("--degree", cfg.degree, "spinor monomial degree bound")->check(CLI::NonNegativeNumber);

    auto* reflect = app.add_subcommand("reflect", "convert a highest weight between the two Borel conventions");
    add_context(reflect);
    reflect->add_option("--weight", cfg.weight, "weight JSON")->required();
    reflect->add_option("--to", cfg.to, "target convention")->check(CLI::IsMember({"standard", "nonstandard"}));

    auto* spinor = app.add_subcommand("spinor", "monomials of the spinor module with their weights");
    add_context(spinor);
    add_depth(spinor);
    add_part(spinor);

    auto* module = app.add_subcommand("module", "weight multiplicities of an irreducible highest weight module");
    add_context(module);
    add_depth(module);
    add_format(module);
    add_convention(module);
    module->add_option("--hw", cfg.weight, "highest weight JSON")->required();

    auto* cand = app.add_subcommand("candidates", "possible primitive weights of spinor (x) K_hw");
    add_context(cand);
    add_part(cand);
    add_convention(cand);
    cand->add_option("--hw", cfg.weight, "highest weight JSON")->required();

    auto* decompose = app.add_subcommand("decompose", "decompose spinor (x) K_hw");
    add_context(decompose);
    add_part(decompose);
    add_depth(decompose);
    add_format(decompose);
    add_convention(decompose);
    decompose->add_option("--hw", cfg.weight, "highest weight JSON")->required();
    decompose->add_option("--method", cfg.method, "closed or bruteforce")->check(CLI::IsMember({"closed", "bruteforce"}));

    auto* casimir = app.add_subcommand("casimir", "Casimir eigenvalue <L, L + 2 rho> on standard labels");
    add_context(casimir);
    add_convention(casimir);
    casimir->add_option("--weight", cfg.weight, "weight JSON")->required();

    auto* check = app.add_subcommand("check", "run an oracle equivalence suite and print its pass/fail matrix");
    check->add_option("--suite", cfg.suite, "suite name")->required()->check(CLI::IsMember({"lemma3", "theorem8", "theorem9", "theorem10"}));
    auto* cm = check->add_option("--m", cfg.m, "restrict to one context");
    auto* cn = check->add_option("--n", cfg.n, "restrict to one context");
    cm->needs(cn);
    cn->needs(cm);
    add_depth(check);
    cfg.format = "json";
    check->add_option("--format", cfg.format, "json or text")->check(CLI::IsMember({"json", "text"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*validate) return cmd_validate(cfg);
        if (*reflect) return cmd_reflect(cfg);
        if (*spinor) return cmd_spinor(cfg);
        if (*module) return cmd_module(cfg);
        if (*cand) return cmd_candidates(cfg);
        if (*decompose) return cmd_decompose(cfg);
        if (*casimir) return cmd_casimir(cfg);
        if (*check) return cmd_check(cfg, cm->count() > 0);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
