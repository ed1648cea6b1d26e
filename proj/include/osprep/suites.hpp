#pragma once

// Oracle-equivalence suites: closed forms against brute force, relation
// suites, reflection identities, the Casimir table and the primitive audit.

#include "osprep/decomp.hpp"
#include "osprep/tensor.hpp"
#include "osprep/validate.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace osprep {

struct MatrixRow {
    std::string label;
    bool pass = false;
    std::string detail;
};

struct SuiteMatrix {
    std::string suite;
    std::vector<MatrixRow> rows;

    bool pass() const {
        if (rows.empty()) return false;
        for (const auto& r : rows)
            if (!r.pass) return false;
        return true;
    }
    std::size_t failures() const {
        std::size_t f = 0;
        for (const auto& r : rows) f += r.pass ? 0 : 1;
        return f;
    }
    void add(std::string label, bool ok, std::string detail = {}) { rows.push_back({std::move(label), ok, std::move(detail)}); }
};

inline const std::vector<Context>& acceptance_grid() {
    static const std::vector<Context> g{{1, 1}, {1, 2}, {2, 1}, {2, 2}, {3, 1}, {3, 2}, {4, 1}, {4, 2}, {5, 1}};
    return g;
}

inline std::vector<Part> parts_of(Context c) {
    return c.m_odd() ? std::vector<Part>{Part::all} : std::vector<Part>{Part::plus, Part::minus};
}

inline std::string product_label(Context c, Part p, const Weight& hw) {
    std::string s = ctx_label(c);
    if (p != Part::all) s += std::string(" S") + (p == Part::plus ? "+" : "-");
    return s + " K" + hw.str();
}

/// Primitive weights, Theorem 7 candidates and weight bounds collected over every product examined.
struct ProductLog {
    struct Entry {
        std::string label;
        std::size_t max_primitive_dim = 0;
        std::vector<Weight> escapes;  // primitive weights outside the candidate set
        bool completely_reducible = false;
        std::vector<Weight> summands;
        std::size_t k_dim = 0;
    };
    std::vector<Entry> entries;
};

inline std::set<Weight> candidate_set(const Weight& hw, Part p) {
    std::set<Weight> s;
    for (const auto& c : candidates(hw, p)) s.insert(c.weight);
    return s;
}

inline void log_rows(ProductLog* log, const TensorProduct& W, const std::vector<PrimitiveReportRow>& rows) {
    if (!log) return;
    ProductLog::Entry e;
    e.label = product_label(W.context(), W.part(), W.factor().highest_weight());
    e.k_dim = W.factor().total_dim();
    auto cand = candidate_set(W.factor().highest_weight(), W.part());
    for (const auto& r : rows) {
        e.max_primitive_dim = std::max(e.max_primitive_dim, r.dim_primitive);
        if (r.dim_primitive > 0 && !cand.count(r.weight)) e.escapes.push_back(r.weight);
    }
    log->entries.push_back(std::move(e));
}

inline void log_brute(ProductLog* log, const TensorProduct& W, const BruteForceReport& rep) {
    if (!log) return;
    ProductLog::Entry e;
    e.label = product_label(W.context(), W.part(), W.factor().highest_weight());
    e.k_dim = W.factor().total_dim();
    e.max_primitive_dim = rep.max_primitive_dim;
    auto cand = candidate_set(W.factor().highest_weight(), W.part());
    for (const auto& p : rep.primitives)
        if (!cand.count(p.weight)) e.escapes.push_back(p.weight);
    e.completely_reducible = rep.result.shape == Shape::completely_reducible;
    for (const auto& s : rep.result.summands) e.summands.push_back(s.nonstandard);
    log->entries.push_back(std::move(e));
}

/// Highest weight of the factor: k eps_1, or k delta_1 for m = 1.
inline Weight ke1_weight(Context c, int k) {
    return c.d() == 0 ? Rational(k) * Weight::delta_unit(c, 1) : Rational(k) * Weight::eps_unit(c, 1);
}

/// Compares a closed-form decomposition with a brute-force report; empty string when they agree.
inline std::string compare_decompositions(const DecompositionResult& closed, const BruteForceReport& rep) {
    std::ostringstream why;
    std::map<Weight, int> a, b;
    for (const auto& s : closed.summands) a[s.nonstandard] += s.multiplicity;
    for (const auto& s : rep.result.summands) b[s.nonstandard] += s.multiplicity;
    if (a != b) {
        why << "primitive weights differ: closed {";
        for (const auto& [w, m] : a) why << " " << w.str() << "x" << m;
        why << " } brute {";
        for (const auto& [w, m] : b) why << " " << w.str() << "x" << m;
        why << " }";
        return why.str();
    }
    if (closed.shape != rep.result.shape) return std::string("shape differs: closed ") + to_string(closed.shape) + ", brute " + to_string(rep.result.shape);
    if (!rep.theorem4_holds) return "lowerable plus primitive dimension differs from the weight space dimension";
    if (closed.shape == Shape::completely_reducible && !rep.character_match)
        return "truncated characters differ at " + (rep.character_mismatch ? rep.character_mismatch->str() : std::string("?"));
    if (closed.shape == Shape::chain) {
        if (!closed.chain || !rep.result.chain) return "chain data missing";
        if (!(closed.chain->upper == rep.result.chain->upper && closed.chain->inner == rep.result.chain->inner))
            return "chain weights differ";
    }
    return {};
}

// ---------------------------------------------------------------------------

inline SuiteMatrix algebra_matrix(const std::vector<Context>& grid) {
    SuiteMatrix m{"algebra", {}};
    for (auto c : grid) {
        auto r = algebra_suite(c);
        std::string detail;
        for (const auto& f : r.families)
            if (!f.pass()) detail += f.name + ": " + f.first_failure + "; ";
        m.add(ctx_label(c), r.pass(), detail);
    }
    return m;
}

inline SuiteMatrix spinor_matrix(const std::vector<Context>& grid, int degree = 8) {
    SuiteMatrix m{"spinor", {}};
    for (auto c : grid) {
        auto r = spinor_suite(c, degree);
        std::string detail;
        for (const auto& f : r.families)
            if (!f.pass()) detail += f.name + ": " + f.first_failure + "; ";
        m.add(ctx_label(c), r.pass(), detail);
    }
    return m;
}

/// A random highest weight in the eps - delta convention satisfying the consistency rules.
inline Weight random_consistent_weight(Context c, std::mt19937& rng) {
    int d = c.d(), n = c.n;
    std::vector<long> k(static_cast<std::size_t>(d)), l(static_cast<std::size_t>(n));
    for (auto& x : k) x = static_cast<long>(rng() % 6);
    std::sort(k.rbegin(), k.rend());
    if (!c.m_odd() && d >= 2 && k.back() == 0) k[k.size() - 2] = 0;
    for (auto& x : l) x = static_cast<long>(rng() % 5);
    std::sort(l.rbegin(), l.rend());
    if (d >= 1 && k.back() < n)
        for (long i = k.back(); i < n; ++i) l[static_cast<std::size_t>(i)] = 0;
    Weight w(c);
    for (int j = 1; j <= d; ++j) w.k(j) = Rational(k[static_cast<std::size_t>(j - 1)]);
    for (int i = 1; i <= n; ++i) w.l(i) = Rational(l[static_cast<std::size_t>(i - 1)]);
    return w;
}

inline SuiteMatrix reflection_matrix(const std::vector<Context>& grid, int samples = 50) {
    SuiteMatrix m{"reflections", {}};
    std::mt19937 rng(2024);
    const Rational half(1, 2);
    for (auto c : grid) {
        std::string bad;
        if (c.d() >= 1)
            for (long k = 1; k <= 5 && bad.empty(); ++k) {
                Weight mu = Rational(k) * Weight::eps_unit(c, 1);
                Weight want = k <= c.n ? nu(static_cast<int>(k), c) : Rational(k - c.n) * Weight::eps_unit(c, 1) + nu(c.n, c);
                if (!(to_standard(mu) == want && to_nonstandard(want) == mu)) bad = "k eps_1 rule at k=" + std::to_string(k);
            }
        for (int it = 0; it < samples && bad.empty(); ++it) {
            Weight mu = random_consistent_weight(c, rng);
            if (!dominance_checks(mu).osp_consistent) {
                bad = "sampler produced " + mu.str();
                break;
            }
            Weight lam = to_standard(mu);
            if (!(lam == standard_closed_form(mu))) bad = "fold differs from closed form at " + mu.str();
            else if (!(to_nonstandard(lam) == mu)) bad = "round trip fails at " + mu.str();
        }
        Weight spin = omega_top(c) - half * nu(c.n, c);
        if (bad.empty() && !(to_standard(spin) == spin && to_nonstandard(spin) == spin)) bad = "spinor weight moved";
        if (bad.empty() && !c.m_odd()) {
            Weight top = omega_top(c) + nu(c.n - 1, c) - Rational(3, 2) * nu(c.n, c);
            Weight want = omega_top(c) - Weight::eps_unit(c, c.d()) - half * nu(c.n, c);
            if (!(to_standard(top) == want)) bad = "minus spinor maps to " + to_standard(top).str();
        }
        m.add(ctx_label(c), bad.empty(), bad);
    }
    return m;
}

struct FactorCase {
    Context ctx;
    int k;
};

inline SuiteMatrix theorem4_matrix(const std::vector<FactorCase>& cases, int depth, ProductLog* log = nullptr) {
    SuiteMatrix m{"theorem4", {}};
    for (const auto& fc : cases) {
        Weight hw = ke1_weight(fc.ctx, fc.k);
        auto K = finite_module(hw, Convention::nonstandard);
        for (Part p : parts_of(fc.ctx)) {
            TensorProduct W(fc.ctx, p, K);
            auto rows = primitive_report(W, depth);
            std::string bad;
            for (const auto& r : rows)
                if (r.dim_primitive + r.dim_lowerable != r.dim_w) {
                    bad = "at " + r.weight.str() + ": " + std::to_string(r.dim_primitive) + " + " + std::to_string(r.dim_lowerable) +
                          " != " + std::to_string(r.dim_w);
                    break;
                }
            log_rows(log, W, rows);
            m.add(product_label(fc.ctx, p, hw) + " weights=" + std::to_string(rows.size()), bad.empty(), bad);
        }
    }
    return m;
}

/// The (m, n, k) with k + d = n + 1, m even, where the product is a chain.
inline bool exceptional(Context c, int k) { return !c.m_odd() && k + c.d() == c.n + 1; }

inline SuiteMatrix theorem8_matrix(const std::vector<Context>& grid, int kmax, int depth, ProductLog* log = nullptr) {
    SuiteMatrix m{"theorem8", {}};
    for (auto c : grid) {
        int top = c.d() == 0 ? c.n : kmax;
        for (int k = 1; k <= top; ++k) {
            if (exceptional(c, k)) continue;
            Weight hw = c.d() == 0 ? nu(k, c) : Rational(k) * Weight::eps_unit(c, 1);
            auto K = finite_module(hw, Convention::nonstandard);
            for (Part p : parts_of(c)) {
                TensorProduct W(c, p, K);
                auto rep = brute_force_decompose(W, depth);
                log_brute(log, W, rep);
                auto closed = spinor_times_ke1(c, k, p);
                std::string why = compare_decompositions(closed, rep);
                m.add(product_label(c, p, hw) + " summands=" + std::to_string(closed.summands.size()), why.empty(), why);
            }
        }
    }
    return m;
}

struct ChainCase {
    Context ctx;
    int k;
};

inline std::vector<ChainCase> theorem9_cases() { return {{{2, 1}, 1}, {{2, 2}, 2}, {{4, 2}, 1}}; }

inline SuiteMatrix theorem9_matrix(const std::vector<ChainCase>& cases, int depth, ProductLog* log = nullptr) {
    SuiteMatrix m{"theorem9", {}};
    for (const auto& cc : cases) {
        Context c = cc.ctx;
        Weight hw = Rational(cc.k) * Weight::eps_unit(c, 1);
        auto K = finite_module(hw, Convention::nonstandard);
        for (Part p : parts_of(c)) {
            TensorProduct W(c, p, K);
            auto rep = brute_force_decompose(W, depth);
            log_brute(log, W, rep);
            auto closed = spinor_times_ke1(c, cc.k, p);
            std::string why;
            if (!exceptional(c, cc.k)) why = "not an exceptional case";
            else if (rep.primitives.size() != 2) why = std::to_string(rep.primitives.size()) + " primitive weights";
            else if (rep.memberships.empty()) why = "lower primitive vector not generated by the top one";
            else if (!rep.theorem4_holds) why = "lowerable plus primitive dimension fails";
            else why = compare_decompositions(closed, rep);
            if (why.empty() && p == Part::plus) {
                // the alternating coefficient criterion against the membership solver, at k and at k + 1
                for (int kk : {cc.k, cc.k + 1}) {
                    auto K2 = finite_module(Rational(kk) * Weight::eps_unit(c, 1), Convention::nonstandard);
                    TensorProduct W2(c, Part::plus, K2);
                    auto wit = theorem8_witness(W2, kk);
                    if (!wit.coefficients) {
                        why = "primitive vector outside the span of a_j (x) b_j at k=" + std::to_string(kk);
                        break;
                    }
                    FieldScalar alt;
                    for (std::size_t j = 0; j < wit.coefficients->size(); ++j)
                        alt += (j % 2 == 0 ? FieldScalar(-1) : FieldScalar(1)) * (*wit.coefficients)[j];
                    TVec top(1);
                    top[0] = FieldScalar(1);
                    bool member = W2.membership(wit.weight, wit.primitives[0], W2.top(), top);
                    if (member != alt.is_zero() || member != exceptional(c, kk)) {
                        why = "alternating sum criterion disagrees with membership at k=" + std::to_string(kk);
                        break;
                    }
                }
            }
            m.add(product_label(c, p, hw) + " chain", why.empty(), why);
        }
    }
    return m;
}

struct Lemma3Tuple {
    int d, n;
    long k, l;
};

inline std::vector<Lemma3Tuple> lemma3_sample(std::size_t count) {
    std::vector<Lemma3Tuple> all;
    for (int d = 2; d <= 4; ++d)
        for (int n = 1; n <= 4; ++n)
            for (long k = 1; k <= 6; ++k)
                for (long l = 1; l <= k; ++l) all.push_back({d, n, k, l});
    std::mt19937 rng(7);
    std::shuffle(all.begin(), all.end(), rng);
    std::vector<Lemma3Tuple> flagged, rest;
    for (const auto& t : all) (t.k + t.l == 2 + 2 * t.n - 2 * t.d ? flagged : rest).push_back(t);
    std::vector<Lemma3Tuple> out;
    for (std::size_t i = 0; i < flagged.size() && i < 3 && out.size() < count; ++i) out.push_back(flagged[i]);
    for (std::size_t i = 0; out.size() < count && i < rest.size(); ++i) out.push_back(rest[i]);
    return out;
}

inline SuiteMatrix lemma3_matrix(std::size_t samples = 20) {
    SuiteMatrix m{"lemma3", {}};
    const std::array<bool, 6> uses_fourth{false, false, true, false, true, true};
    for (const auto& t : lemma3_sample(samples)) {
        auto r = lemma3_reducibility(t.d, t.n, t.k, t.l);
        std::string why;
        bool separated = true;
        for (std::size_t i = 0; i < 6; ++i) {
            if (uses_fourth[i] && !r.has_fourth) continue;
            if (!(r.formula[i] == r.computed[i])) {
                why = "difference " + std::to_string(i + 1) + ": formula " + r.formula[i].str() + ", Casimir " + r.computed[i].str();
                break;
            }
            if (r.computed[i].is_zero()) separated = false;
        }
        if (why.empty() && r.completely_reducible != (t.k + t.l != 2 + 2 * t.n - 2 * t.d)) why = "predicate mismatch";
        if (why.empty() && separated != r.completely_reducible) why = "Casimir separation does not match the predicate";
        std::ostringstream label;
        label << "d=" << t.d << " n=" << t.n << " k=" << t.k << " l=" << t.l << (r.completely_reducible ? "" : " flagged");
        m.add(label.str(), why.empty(), why);
    }
    return m;
}

/// mu = sum (k_j + n) eps_j with k_j >= 1 and |mu| <= max_size, a != d - 1 for even m; includes mu = 0.
inline std::vector<Weight> theorem11_forms(Context c, long max_size) {
    std::vector<Weight> out{Weight(c)};
    const int d = c.d();
    for (int a = 1; a <= d; ++a) {
        if (!c.m_odd() && a == d - 1) continue;
        std::vector<long> k(static_cast<std::size_t>(a), 1);
        auto rec = [&](auto&& self, int j, long prev) -> void {
            if (j == a) {
                long size = 0;
                for (long x : k) size += x + c.n;
                if (size > max_size) return;
                Weight w(c);
                for (int q = 0; q < a; ++q) w.k(q + 1) = Rational(k[static_cast<std::size_t>(q)] + c.n);
                out.push_back(w);
                return;
            }
            for (long x = 1; x <= prev; ++x) {
                k[static_cast<std::size_t>(j)] = x;
                self(self, j + 1, x);
            }
        };
        rec(rec, 0, max_size);
    }
    return out;
}

inline DecompositionResult spinor_itself(Context c, Part p) {
    DecompositionResult r;
    r.ctx = c;
    r.summands.push_back(summand_from_nonstandard(spinor_highest_weight(c, p)));
    return r;
}

inline SuiteMatrix theorem10_matrix(const std::vector<Context>& grid, long max_size, int depth, ProductLog* log = nullptr) {
    SuiteMatrix m{"theorem10", {}};
    for (auto c : grid) {
        for (const auto& mu : theorem11_forms(c, max_size)) {
            auto K = finite_module(mu, Convention::nonstandard);
            for (Part p : parts_of(c)) {
                TensorProduct W(c, p, K);
                auto rep = brute_force_decompose(W, depth);
                log_brute(log, W, rep);
                bool trivial = mu.is_zero();
                auto t11 = trivial ? spinor_itself(c, p) : theorem11_decompose(mu, p);
                std::string why = compare_decompositions(t11, rep);
                std::string label = product_label(c, p, mu);
                m.add(label + " nonstandard closed form", why.empty(), why);
                if (trivial) continue;
                // the displayed shifts, term by term
                std::string shift;
                auto I = enumerate_I(mu);
                Weight s = spinor_highest_weight(c, p);
                for (std::size_t i = 0; i < I.size(); ++i) {
                    Weight want = mu - I[i].mu + s;
                    if (!c.m_odd()) {
                        Rational sg(sigma(I[i].mu));
                        want += (p == Part::plus ? -sg : sg) * Weight::delta_unit(c, c.n);
                    }
                    if (!(t11.summands[i].nonstandard == want)) shift = "summand " + std::to_string(i) + " lacks the displayed shift";
                }
                m.add(label + " sigma shift", shift.empty(), shift);
                // standard labels: the other display against reflection of this one
                Weight Lam = to_standard(mu);
                auto t10 = theorem10_decompose(Lam, p);
                std::set<Weight> st10, st11, brute;
                for (const auto& x : t10.summands) st10.insert(x.standard);
                for (const auto& x : t11.summands) st11.insert(to_standard_formal(x.nonstandard));
                for (const auto& x : rep.result.summands) brute.insert(x.standard);
                std::string lab;
                if (t10.summands.size() != st10.size()) lab = "standard display repeats a summand; ";
                if (st10 != st11) {
                    lab += "standard display {";
                    for (const auto& w : st10) lab += " " + w.str();
                    lab += " } vs reflected {";
                    for (const auto& w : st11) lab += " " + w.str();
                    lab += " }";
                } else if (st10 != brute) {
                    lab += "brute-force standard labels differ";
                }
                m.add(label + " standard labels " + Lam.str(), lab.empty(), lab);
            }
        }
    }
    return m;
}

inline SuiteMatrix primitive_audit_matrix(const ProductLog& log) {
    SuiteMatrix m{"primitives", {}};
    for (const auto& e : log.entries) {
        std::string why;
        if (e.max_primitive_dim > 1) why = "primitive dimension " + std::to_string(e.max_primitive_dim);
        for (const auto& w : e.escapes) why += " escape " + w.str();
        m.add(e.label, why.empty(), why);
    }
    return m;
}

inline SuiteMatrix weight_bound_matrix(const ProductLog& log, int depth) {
    SuiteMatrix m{"bound", {}};
    for (const auto& e : log.entries) {
        if (!e.completely_reducible) continue;
        std::string why;
        std::size_t worst = 0;
        for (const auto& s : e.summands) {
            IrreducibleModule L(s, Convention::nonstandard, depth);
            for (const auto& sp : L.spaces()) worst = std::max(worst, sp.dim);
        }
        if (worst > e.k_dim) why = "weight multiplicity " + std::to_string(worst) + " exceeds dim K = " + std::to_string(e.k_dim);
        m.add(e.label + " max=" + std::to_string(worst) + " dimK=" + std::to_string(e.k_dim), why.empty(), why);
    }
    return m;
}

}  // namespace osprep
