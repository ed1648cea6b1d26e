#pragma once

// Root data of osp(m|2n) for the eps - delta convention (odd simple root
// eps_d - delta_1) and the distinguished delta - eps convention, plus the
// odd reflections linking their highest weights.

#include "osprep/linalg.hpp"
#include "osprep/weight.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace osprep {

enum class Convention { nonstandard, standard };

inline const char* to_string(Convention c) { return c == Convention::standard ? "standard" : "nonstandard"; }

struct Root {
    Weight weight;
    bool odd = false;

    friend bool operator==(const Root&, const Root&) = default;
};

struct RootSystem {
    Context ctx;
    Convention convention = Convention::nonstandard;
    std::vector<Root> simple;
    std::vector<Root> positive;
};

namespace detail {

inline Weight e(Context c, int j) { return Weight::eps_unit(c, j); }
inline Weight dl(Context c, int i) { return Weight::delta_unit(c, i); }

}  // namespace detail

inline RootSystem build_root_system(Context ctx, Convention conv) {
    validate_context(ctx);
    if (ctx.n < 1) throw std::invalid_argument("root system: n >= 1 required");
    using detail::dl;
    using detail::e;
    const int d = ctx.d(), n = ctx.n;
    const bool odd_m = ctx.m_odd();
    RootSystem rs{ctx, conv, {}, {}};

    // even positives: so(m) then sp(2n)
    for (int i = 1; i <= d; ++i)
        for (int j = i + 1; j <= d; ++j) {
            rs.positive.push_back({e(ctx, i) - e(ctx, j), false});
            rs.positive.push_back({e(ctx, i) + e(ctx, j), false});
        }
    if (odd_m)
        for (int j = 1; j <= d; ++j) rs.positive.push_back({e(ctx, j), false});
    for (int i = 1; i <= n; ++i)
        for (int l = i + 1; l <= n; ++l) {
            rs.positive.push_back({dl(ctx, i) - dl(ctx, l), false});
            rs.positive.push_back({dl(ctx, i) + dl(ctx, l), false});
        }
    for (int i = 1; i <= n; ++i) rs.positive.push_back({Rational(2) * dl(ctx, i), false});
    // odd positives
    for (int j = 1; j <= d; ++j)
        for (int i = 1; i <= n; ++i) {
            Weight a = conv == Convention::nonstandard ? e(ctx, j) - dl(ctx, i) : dl(ctx, i) - e(ctx, j);
            rs.positive.push_back({a, true});
            rs.positive.push_back({e(ctx, j) + dl(ctx, i), true});
        }
    if (odd_m)
        for (int i = 1; i <= n; ++i) rs.positive.push_back({dl(ctx, i), true});

    if (conv == Convention::nonstandard || d == 0) {
        for (int j = 1; j < d; ++j) rs.simple.push_back({e(ctx, j) - e(ctx, j + 1), false});
        if (d >= 1) rs.simple.push_back({e(ctx, d) - dl(ctx, 1), true});
        for (int i = 1; i < n; ++i) rs.simple.push_back({dl(ctx, i) - dl(ctx, i + 1), false});
        if (odd_m)
            rs.simple.push_back({dl(ctx, n), true});
        else
            rs.simple.push_back({Rational(2) * dl(ctx, n), false});
    } else {
        for (int i = 1; i < n; ++i) rs.simple.push_back({dl(ctx, i) - dl(ctx, i + 1), false});
        rs.simple.push_back({dl(ctx, n) - e(ctx, 1), true});
        for (int j = 1; j < d; ++j) rs.simple.push_back({e(ctx, j) - e(ctx, j + 1), false});
        if (odd_m)
            rs.simple.push_back({e(ctx, d), false});
        else if (d >= 2)
            rs.simple.push_back({e(ctx, d - 1) + e(ctx, d), false});
        else
            rs.simple.push_back({dl(ctx, n) + e(ctx, 1), true});
    }
    return rs;
}

/// Coordinates of w in the basis of simple roots.
inline std::vector<Rational> simple_coordinates(const RootSystem& rs, const Weight& w) {
    const Context& c = rs.ctx;
    auto flat = [&](const Weight& x) {
        Vec<Rational> v(x.eps());
        v.insert(v.end(), x.delta().begin(), x.delta().end());
        return v;
    };
    IncrementalBasis<Rational> basis(static_cast<std::size_t>(c.rank()));
    for (const auto& r : rs.simple) basis.insert(flat(r.weight));
    auto co = basis.coordinates(flat(w));
    if (!co) throw std::logic_error("simple_coordinates: simple roots do not span");
    return *co;
}

inline Rational height(const RootSystem& rs, const Weight& w) {
    Rational h;
    for (const auto& x : simple_coordinates(rs, w)) h += x;
    return h;
}

/// eps_d - delta_1, ..., eps_d - delta_n, eps_{d-1} - delta_1, ..., eps_1 - delta_n.
inline std::vector<Root> odd_reflection_sequence(Context ctx) {
    std::vector<Root> seq;
    for (int j = ctx.d(); j >= 1; --j)
        for (int i = 1; i <= ctx.n; ++i)
            seq.push_back({Weight::eps_unit(ctx, j) - Weight::delta_unit(ctx, i), true});
    return seq;
}

/// Highest weight after replacing the odd positive root alpha by -alpha.
inline Weight reflect_weight(const Weight& w, const Root& alpha) {
    if (!alpha.odd) throw std::invalid_argument("reflect_weight: even root supplied");
    if (inner(w, alpha.weight).is_zero()) return w;
    return w - alpha.weight;
}

namespace detail {

inline void require_consistent(const Weight& w, const char* who) {
    auto rep = dominance_checks(w);
    if (!rep.osp_consistent) throw std::invalid_argument(std::string(who) + ": inconsistent weight " + w.str() + ": " + rep.violation);
}

}  // namespace detail

/// Fold of odd reflections along the sequence above.
inline Weight to_standard_formal(const Weight& mu) {
    Weight w = mu;
    for (const auto& a : odd_reflection_sequence(mu.context())) w = reflect_weight(w, a);
    return w;
}

inline Weight to_nonstandard_formal(const Weight& lam) {
    Weight w = lam;
    auto seq = odd_reflection_sequence(lam.context());
    for (auto it = seq.rbegin(); it != seq.rend(); ++it) w = reflect_weight(w, {-it->weight, true});
    return w;
}

inline Weight to_standard(const Weight& mu) {
    detail::require_consistent(mu, "to_standard");
    return to_standard_formal(mu);
}

inline Weight to_nonstandard(const Weight& lam) {
    Weight mu = to_nonstandard_formal(lam);
    detail::require_consistent(mu, "to_nonstandard");
    return mu;
}

/// Closed form: sum_{j<=a}(k_j - n) eps_j + sum l_i delta_i + sum_{j>a} nu_{k_j} + a nu_n,
/// with a the largest index such that k_a >= n. Integral k only.
inline Weight standard_closed_form(const Weight& mu) {
    const Context& c = mu.context();
    const int d = c.d(), n = c.n;
    int a = 0;
    for (int j = 1; j <= d; ++j) {
        if (!mu.k(j).is_integer()) throw std::invalid_argument("standard_closed_form: integral eps part required");
        if (mu.k(j) >= Rational(n)) a = j;
    }
    Weight lam(c);
    for (int j = 1; j <= a; ++j) lam.k(j) = mu.k(j) - Rational(n);
    for (int i = 1; i <= n; ++i) lam.l(i) = mu.l(i);
    for (int j = a + 1; j <= d; ++j) lam += nu(static_cast<int>(mu.k(j).to_long()), c);
    lam += Rational(a) * nu(n, c);
    return lam;
}

}  // namespace osprep
