#pragma once

// Closed-form decompositions of spinor (x) finite-dimensional products, the
// candidate weights of primitive vectors, and the Casimir separation table.

#include "osprep/result.hpp"
#include "osprep/superpoly.hpp"

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace osprep {

/// Highest weight of S (m odd, part all) or of S+ / S- (m even) in the eps - delta convention.
inline Weight spinor_highest_weight(Context ctx, Part part) {
    if (ctx.m_odd() != (part == Part::all)) throw std::invalid_argument("spinor_highest_weight: part does not match the parity of m");
    Weight w = omega_top(ctx) - Rational(1, 2) * nu(ctx.n, ctx);
    if (part == Part::minus) w += nu(ctx.n - 1, ctx) - nu(ctx.n, ctx);
    return w;
}

inline Part opposite(Part p) { return p == Part::plus ? Part::minus : (p == Part::minus ? Part::plus : Part::all); }

/// so(m): S (x) L_lambda = sum over mu in I_lambda of L_{lambda - mu + omega_d}.
inline std::vector<Weight> so_spinor_decompose(const Weight& lam) {
    for (const auto& x : lam.delta())
        if (!x.is_zero()) throw std::invalid_argument("so_spinor_decompose: delta part must vanish");
    for (const auto& x : lam.eps())
        if (!x.is_integer()) throw std::invalid_argument("so_spinor_decompose: integral eps part required");
    std::vector<Weight> out;
    for (const auto& e : enumerate_I(lam)) out.push_back(lam - e.mu + omega_top(lam.context()));
    return out;
}

struct Candidate {
    Weight weight;
    Weight mu;
    std::vector<long> shift;  // delta-shift l_1..l_n
};

/// Possible weights of primitive vectors in S (x) K_Lambda.
inline std::vector<Candidate> candidates(const Weight& Lambda, Part part) {
    const Context& c = Lambda.context();
    auto rep = dominance_checks(Lambda);
    if (!rep.osp_consistent) throw std::invalid_argument("candidates: inconsistent highest weight: " + rep.violation);
    Weight lam(c);
    for (int j = 1; j <= c.d(); ++j) {
        if (!Lambda.k(j).is_integer()) throw std::invalid_argument("candidates: integral eps part required");
        lam.k(j) = Lambda.k(j);
    }
    std::vector<long> kappa(static_cast<std::size_t>(c.n));
    for (int i = 1; i <= c.n; ++i) {
        Rational x = i < c.n ? Lambda.l(i) - Lambda.l(i + 1) : Lambda.l(i);
        if (!x.is_integer() || x.sign() < 0) throw std::invalid_argument("candidates: delta part is not sp-dominant integral");
        kappa[static_cast<std::size_t>(i - 1)] = x.to_long();
    }
    std::vector<long> bound = kappa;
    bound.back() = 2 * kappa.back() + (c.m_odd() ? 0 : 1);
    Weight base = omega_top(c) - Rational(1, 2) * nu(c.n, c);
    std::vector<Candidate> out;
    for (const auto& e : enumerate_I(lam)) {
        std::vector<long> l(static_cast<std::size_t>(c.n), 0);
        auto rec = [&](auto&& self, int i) -> void {
            if (i == c.n) {
                Weight shift(c);
                long deg = 0;
                for (int q = 0; q < c.n; ++q) {
                    shift.l(q + 1) = Rational(l[static_cast<std::size_t>(q)]);
                    deg += l[static_cast<std::size_t>(q)];
                }
                for (int b : e.bits) deg += b;
                if (!c.m_odd() && (deg % 2 == 0) != (part == Part::plus)) return;
                out.push_back({Lambda - e.mu - shift + base, e.mu, l});
                return;
            }
            for (long x = 0; x <= bound[static_cast<std::size_t>(i)]; ++x) {
                l[static_cast<std::size_t>(i)] = x;
                self(self, i + 1);
            }
        };
        rec(rec, 0);
    }
    return out;
}

/// S (x) K_{k eps_1} (for m = 1: S (x) L_{nu_k}, 1 <= k <= n).
inline DecompositionResult spinor_times_ke1(Context c, int k, Part part) {
    validate_context(c);
    if (c.n < 1) throw std::invalid_argument("spinor_times_ke1: n >= 1 required");
    if (k < 1) throw std::invalid_argument("spinor_times_ke1: k >= 1 required");
    DecompositionResult r;
    r.ctx = c;
    const int d = c.d(), n = c.n;
    auto add = [&](const Weight& w) { r.summands.push_back(summand_from_nonstandard(w)); };
    if (d == 0) {
        if (k > n) throw std::invalid_argument("spinor_times_ke1: m = 1 requires k <= n");
        Weight h = Rational(1, 2) * nu(n, c);
        if (k < n) {
            add(nu(k, c) - h);
            add(nu(k - 1, c) - h);
        } else {
            add(h);
            add(h - Weight::delta_unit(c, n));
            add(h - Rational(2) * Weight::delta_unit(c, n));
        }
        return r;
    }
    Weight e1 = Weight::eps_unit(c, 1);
    if (c.m_odd()) {
        Weight s = spinor_highest_weight(c, Part::all);
        add(Rational(k) * e1 + s);
        add(Rational(k - 1) * e1 + s);
        return r;
    }
    Weight upper = Rational(k) * e1 + spinor_highest_weight(c, part);
    Weight lower = Rational(k - 1) * e1 + spinor_highest_weight(c, opposite(part));
    add(upper);
    add(lower);
    if (k + d == n + 1) {
        r.shape = Shape::chain;
        ChainInfo ch{upper, lower, {}};
        ch.notes.push_back("indecomposable but not irreducible");
        ch.notes.push_back("V / K_inner is isomorphic to K_upper");
        ch.notes.push_back("the quotient of the whole product by V is a quotient of a Verma module; its irreducibility is not asserted");
        r.chain = ch;
    }
    return r;
}

struct Lemma3Report {
    std::array<Weight, 4> weights;  // eps - delta labels, listed order
    std::array<Weight, 4> kappa;    // standard labels
    bool has_fourth = false;
    std::array<Rational, 6> formula{};   // (1,2) (1,3) (1,4) (2,3) (2,4) (3,4)
    std::array<Rational, 6> computed{};  // from casimir_eigenvalue; entries involving kappa_4 only if has_fourth
    /// False exactly when k + l = 2 + 2n - 2d, where the Casimir argument is inconclusive.
    bool completely_reducible = true;
};

/// Casimir separation for S (x) K_{k eps_1 + l eps_2} of osp(2d+1|2n).
inline Lemma3Report lemma3_reducibility(int d, int n, long k, long l) {
    if (d < 2 || n < 1) throw std::invalid_argument("lemma3: d >= 2 and n >= 1 required");
    if (!(k >= l && l >= 1)) throw std::invalid_argument("lemma3: k >= l >= 1 required");
    Context c{2 * d + 1, n};
    Weight s = spinor_highest_weight(c, Part::all);
    Weight e1 = Weight::eps_unit(c, 1), e2 = Weight::eps_unit(c, 2);
    Lemma3Report r;
    r.weights = {Rational(k) * e1 + Rational(l) * e2 + s, Rational(k) * e1 + Rational(l - 1) * e2 + s,
                 Rational(k - 1) * e1 + Rational(l - 1) * e2 + s, Rational(k - 1) * e1 + Rational(l) * e2 + s};
    r.has_fourth = l < k;
    std::array<Rational, 4> cas;
    for (std::size_t i = 0; i < 4; ++i) {
        r.kappa[i] = to_standard_formal(r.weights[i]);
        cas[i] = casimir_eigenvalue(r.kappa[i]);
    }
    Rational D(d), N(n), K(k), L(l), half(1, 2);
    r.formula = {D - N + L - Rational(3, 2), K + L + Rational(2) * D - Rational(2) * N - Rational(2), D - N + K - half,
                 D - N + K - half, K - L + Rational(1), Rational(3, 2) - D + N - L};
    const std::array<std::pair<int, int>, 6> pairs{{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
    for (std::size_t i = 0; i < 6; ++i) {
        auto [a, b] = pairs[i];
        if (b == 3 && !r.has_fourth) continue;
        r.computed[i] = cas[static_cast<std::size_t>(a)] - cas[static_cast<std::size_t>(b)];
    }
    r.completely_reducible = k + l != 2 + 2 * n - 2 * d;
    return r;
}

namespace detail {

inline void require_theorem_form(const Weight& eps_part, int& a, long shift, const char* who) {
    const Context& c = eps_part.context();
    a = 0;
    bool ended = false;
    for (int j = 1; j <= c.d(); ++j) {
        const Rational& x = eps_part.k(j);
        if (!x.is_integer()) throw std::invalid_argument(std::string(who) + ": integral eps part required");
        if (x.is_zero()) {
            ended = true;
            continue;
        }
        if (ended || x.to_long() < 1 + shift)
            throw std::invalid_argument(std::string(who) + ": eps coordinates must be >= " + std::to_string(1 + shift) +
                                        " on a leading block and 0 after it");
        ++a;
    }
    if (!c.m_odd() && a == c.d() - 1) throw std::invalid_argument(std::string(who) + ": a = d - 1 is excluded for even m");
}

}  // namespace detail

/// K_s (x) K_mu with mu = sum_{j<=a} (k_j + n) eps_j, k_j >= 1 (eps - delta labels).
inline DecompositionResult theorem11_decompose(const Weight& mu, Part part) {
    const Context& c = mu.context();
    for (const auto& x : mu.delta())
        if (!x.is_zero()) throw std::invalid_argument("theorem11: mu must be an so(m) weight");
    int a = 0;
    detail::require_theorem_form(mu, a, c.n, "theorem11");
    DecompositionResult r;
    r.ctx = c;
    Weight s = spinor_highest_weight(c, part);
    for (const auto& e : enumerate_I(mu)) {
        Weight w = mu - e.mu + s;
        if (!c.m_odd()) {
            Rational sg(sigma(e.mu));
            w += (part == Part::plus ? -sg : sg) * Weight::delta_unit(c, c.n);
        }
        r.summands.push_back(summand_from_nonstandard(w));
    }
    return r;
}

/// L_s (x) L_Lambda with Lambda = sum_{j<=a} k_j eps_j + a nu_n, k_j >= 1 (standard labels).
inline DecompositionResult theorem10_decompose(const Weight& Lambda, Part part) {
    const Context& c = Lambda.context();
    Weight lam(c);
    for (int j = 1; j <= c.d(); ++j) lam.k(j) = Lambda.k(j);
    int a = 0;
    detail::require_theorem_form(lam, a, 0, "theorem10");
    if (!(Lambda - lam == Rational(a) * nu(c.n, c))) throw std::invalid_argument("theorem10: delta part must equal a nu_n");
    DecompositionResult r;
    r.ctx = c;
    Weight base = omega_top(c) - Rational(1, 2) * nu(c.n, c);
    if (part == Part::minus) base -= Weight::eps_unit(c, c.d());  // omega_{d-1} = omega_d - eps_d
    if (c.m_odd() != (part == Part::all)) throw std::invalid_argument("theorem10: part does not match the parity of m");
    for (const auto& e : enumerate_I(lam)) {
        Weight w = Lambda - e.mu + base;
        if (!c.m_odd()) {
            Rational sg(sigma(e.mu));
            w += (part == Part::plus ? -sg : sg) * Weight::eps_unit(c, c.d());
        }
        r.summands.push_back({to_nonstandard_formal(w), w, 1});
    }
    return r;
}

}  // namespace osprep
