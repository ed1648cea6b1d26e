#pragma once

// The algebra Lambda_{d|n}: anticommuting theta_1..theta_d, commuting
// t_1..t_n, with theta_j t_i = -t_i theta_j. The t's carry the odd grading.
// osp(m|2n) acts on it by differential operators (spinor modules).

#include "osprep/field.hpp"
#include "osprep/weight.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace osprep {

struct SuperMonomial {
    std::vector<std::uint8_t> gamma;  // theta exponents, 0/1
    std::vector<int> beta;            // t exponents

    int theta_count() const {
        int s = 0;
        for (auto g : gamma) s += g;
        return s;
    }
    int t_degree() const {
        int s = 0;
        for (auto b : beta) s += b;
        return s;
    }
    int degree() const { return theta_count() + t_degree(); }
    int parity() const { return t_degree() % 2; }

    friend bool operator==(const SuperMonomial&, const SuperMonomial&) = default;
    friend auto operator<=>(const SuperMonomial&, const SuperMonomial&) = default;

    std::string str() const {
        std::string s;
        for (std::size_t j = 0; j < gamma.size(); ++j)
            if (gamma[j]) s += "theta" + std::to_string(j + 1);
        for (std::size_t i = 0; i < beta.size(); ++i) {
            if (beta[i] == 0) continue;
            s += "t" + std::to_string(i + 1);
            if (beta[i] > 1) s += "^" + std::to_string(beta[i]);
        }
        return s.empty() ? "1" : s;
    }
};

inline SuperMonomial unit_monomial(int d, int n) {
    return {std::vector<std::uint8_t>(static_cast<std::size_t>(d), 0), std::vector<int>(static_cast<std::size_t>(n), 0)};
}

class SuperPoly {
public:
    using Terms = std::map<SuperMonomial, FieldScalar>;

    SuperPoly() = default;
    SuperPoly(const SuperMonomial& m, FieldScalar c = FieldScalar(1)) { add(m, std::move(c)); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add(const SuperMonomial& m, const FieldScalar& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    FieldScalar coef(const SuperMonomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? FieldScalar(0) : it->second;
    }

    SuperPoly& operator+=(const SuperPoly& o) {
        for (const auto& [m, c] : o.terms_) add(m, c);
        return *this;
    }
    SuperPoly& operator-=(const SuperPoly& o) {
        for (const auto& [m, c] : o.terms_) add(m, -c);
        return *this;
    }
    SuperPoly& operator*=(const FieldScalar& s) {
        if (s.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, c] : terms_) c *= s;
        return *this;
    }
    friend SuperPoly operator+(SuperPoly a, const SuperPoly& b) { return a += b; }
    friend SuperPoly operator-(SuperPoly a, const SuperPoly& b) { return a -= b; }
    friend SuperPoly operator*(const FieldScalar& s, SuperPoly p) { return p *= s; }
    friend bool operator==(const SuperPoly& a, const SuperPoly& b) { return a.terms_ == b.terms_; }

    friend std::ostream& operator<<(std::ostream& os, const SuperPoly& p) { return os << p.str(); }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [m, c] : terms_) s += (s.empty() ? "" : " + ") + ("(" + c.str() + ")*" + m.str());
        return s;
    }

private:
    Terms terms_;
};

namespace detail {

/// Product of canonical monomials: sign and result, or nullopt when zero.
inline std::optional<std::pair<int, SuperMonomial>> monomial_product(const SuperMonomial& a, const SuperMonomial& b) {
    // theta^ga t^ba theta^gb t^bb: move theta^gb left past t^ba, then merge thetas
    int sign = (b.theta_count() * a.t_degree()) % 2 ? -1 : 1;
    SuperMonomial r = a;
    for (std::size_t j = 0; j < b.gamma.size(); ++j) {
        if (!b.gamma[j]) continue;
        if (r.gamma[j]) return std::nullopt;
        // theta_j from the right factor passes the thetas of a with index > j
        // and the thetas of b with index < j that were already inserted.
        int passed = 0;
        for (std::size_t k = j + 1; k < a.gamma.size(); ++k) passed += a.gamma[k];
        if (passed % 2) sign = -sign;
        r.gamma[j] = 1;
    }
    for (std::size_t i = 0; i < b.beta.size(); ++i) r.beta[i] += b.beta[i];
    return std::make_pair(sign, r);
}

}  // namespace detail

inline SuperPoly multiply(const SuperPoly& p, const SuperPoly& q) {
    SuperPoly out;
    for (const auto& [ma, ca] : p.terms())
        for (const auto& [mb, cb] : q.terms()) {
            auto r = detail::monomial_product(ma, mb);
            if (!r) continue;
            out.add(r->second, FieldScalar(r->first) * ca * cb);
        }
    return out;
}

inline SuperPoly theta(int d, int n, int j) {
    SuperMonomial m = unit_monomial(d, n);
    m.gamma.at(static_cast<std::size_t>(j - 1)) = 1;
    return SuperPoly(m);
}
inline SuperPoly tvar(int d, int n, int i) {
    SuperMonomial m = unit_monomial(d, n);
    m.beta.at(static_cast<std::size_t>(i - 1)) = 1;
    return SuperPoly(m);
}

namespace detail {

template <class F>
SuperPoly map_terms(const SuperPoly& p, F f) {
    SuperPoly out;
    for (const auto& [m, c] : p.terms()) {
        auto r = f(m);
        if (r) out.add(r->second, r->first * c);
    }
    return out;
}

using MonoImage = std::optional<std::pair<FieldScalar, SuperMonomial>>;

inline int theta_prefix(const SuperMonomial& m, int j) {
    int s = 0;
    for (int k = 0; k < j - 1; ++k) s += m.gamma[static_cast<std::size_t>(k)];
    return s;
}

}  // namespace detail

enum class DerivKind { theta, t };

/// Left derivation: d/dtheta_j picks up (-1)^{gamma_1+..+gamma_{j-1}},
/// d/dt_i picks up beta_i (-1)^{|gamma|}.
inline SuperPoly derive(DerivKind kind, int idx, const SuperPoly& p) {
    return detail::map_terms(p, [&](const SuperMonomial& m) -> detail::MonoImage {
        SuperMonomial r = m;
        if (kind == DerivKind::theta) {
            auto j = static_cast<std::size_t>(idx - 1);
            if (!m.gamma.at(j)) return std::nullopt;
            r.gamma[j] = 0;
            return std::make_pair(FieldScalar(detail::theta_prefix(m, idx) % 2 ? -1 : 1), r);
        }
        auto i = static_cast<std::size_t>(idx - 1);
        if (m.beta.at(i) == 0) return std::nullopt;
        r.beta[i] -= 1;
        long c = m.beta[i] * (m.theta_count() % 2 ? -1 : 1);
        return std::make_pair(FieldScalar(c), r);
    });
}

/// Left multiplication by theta_j or t_i.
inline SuperPoly mult_var(DerivKind kind, int idx, const SuperPoly& p) {
    return detail::map_terms(p, [&](const SuperMonomial& m) -> detail::MonoImage {
        SuperMonomial r = m;
        if (kind == DerivKind::theta) {
            auto j = static_cast<std::size_t>(idx - 1);
            if (m.gamma.at(j)) return std::nullopt;
            r.gamma[j] = 1;
            return std::make_pair(FieldScalar(detail::theta_prefix(m, idx) % 2 ? -1 : 1), r);
        }
        auto i = static_cast<std::size_t>(idx - 1);
        r.beta.at(i) += 1;
        return std::make_pair(FieldScalar(m.theta_count() % 2 ? -1 : 1), r);
    });
}

enum class OpKind { X, Y, H };

inline const char* to_string(OpKind k) { return k == OpKind::X ? "X" : (k == OpKind::Y ? "Y" : "H"); }

/// Spinor realization of the simple root operators alpha_k (k = 1..d+n).
inline SuperPoly act(Context ctx, OpKind which, int k, const SuperPoly& p) {
    const int d = ctx.d(), n = ctx.n;
    if (n < 1) throw std::invalid_argument("spinor realization requires n >= 1");
    if (k < 1 || k > d + n) throw std::out_of_range("act: simple root index out of range");
    auto dth = [&](int j, const SuperPoly& q) { return derive(DerivKind::theta, j, q); };
    auto dt = [&](int i, const SuperPoly& q) { return derive(DerivKind::t, i, q); };
    auto th = [&](int j, const SuperPoly& q) { return mult_var(DerivKind::theta, j, q); };
    auto tt = [&](int i, const SuperPoly& q) { return mult_var(DerivKind::t, i, q); };
    if (k < d) {
        int a = d - k, b = d - k + 1;
        if (which == OpKind::X) return th(a, dth(b, p));
        if (which == OpKind::Y) return th(b, dth(a, p));
        return th(a, dth(a, p)) - th(b, dth(b, p));
    }
    if (k == d) {
        if (which == OpKind::X) return tt(n, dth(1, p));
        if (which == OpKind::Y) return th(1, dt(n, p));
        return tt(n, dt(n, p)) + th(1, dth(1, p));
    }
    int i = k - d;
    if (i < n) {
        int a = n - i, b = n - i + 1;
        if (which == OpKind::X) return tt(a, dt(b, p));
        if (which == OpKind::Y) return tt(b, dt(a, p));
        return tt(a, dt(a, p)) - tt(b, dt(b, p));
    }
    if (which == OpKind::H) {
        SuperPoly r = tt(1, dt(1, p)) + FieldScalar(Rational(1, 2)) * p;
        return FieldScalar(-1) * r;
    }
    if (ctx.m_odd()) {
        if (which == OpKind::X) return FieldScalar::zeta() * dt(1, p);
        return FieldScalar::zeta() * tt(1, p);
    }
    if (which == OpKind::X) return FieldScalar(Rational(-1, 2)) * dt(1, dt(1, p));
    return FieldScalar(Rational(1, 2)) * tt(1, tt(1, p));
}

/// Parity of the operator for simple root k.
inline int op_parity(Context ctx, int k) {
    if (k == ctx.d()) return 1;
    if (k == ctx.d() + ctx.n && ctx.m_odd()) return 1;
    return 0;
}

/// omega_d - 1/2 nu_n - sum gamma_{d-j+1} eps_j - sum beta_{n-i+1} delta_i.
inline Weight weight_of(const SuperMonomial& mon, Context ctx) {
    const int d = ctx.d(), n = ctx.n;
    Weight w = omega_top(ctx) - Rational(1, 2) * nu(n, ctx);
    for (int j = 1; j <= d; ++j) w.k(j) -= Rational(mon.gamma.at(static_cast<std::size_t>(d - j)));
    for (int i = 1; i <= n; ++i) w.l(i) -= Rational(mon.beta.at(static_cast<std::size_t>(n - i)));
    return w;
}

/// Inverse of weight_of on the weights that occur.
inline std::optional<SuperMonomial> monomial_of_weight(const Weight& w) {
    const Context& ctx = w.context();
    const int d = ctx.d(), n = ctx.n;
    Weight diff = omega_top(ctx) - Rational(1, 2) * nu(n, ctx) - w;
    SuperMonomial m = unit_monomial(d, n);
    for (int j = 1; j <= d; ++j) {
        const Rational& g = diff.k(j);
        if (!(g.is_zero() || g == Rational(1))) return std::nullopt;
        m.gamma[static_cast<std::size_t>(d - j)] = g.is_zero() ? 0 : 1;
    }
    for (int i = 1; i <= n; ++i) {
        const Rational& b = diff.l(i);
        if (!b.is_integer() || b.sign() < 0) return std::nullopt;
        m.beta[static_cast<std::size_t>(n - i)] = static_cast<int>(b.to_long());
    }
    return m;
}

enum class Part { all, plus, minus };

inline const char* to_string(Part p) { return p == Part::all ? "all" : (p == Part::plus ? "plus" : "minus"); }

inline bool in_part(const SuperMonomial& m, Part part) {
    if (part == Part::all) return true;
    return (m.degree() % 2 == 0) == (part == Part::plus);
}

/// Monomials with sum(gamma) + sum(beta) <= depth, sorted by degree then exponents.
inline std::vector<SuperMonomial> basis_up_to(Context ctx, int depth, Part part = Part::all) {
    if (depth < 0) throw std::invalid_argument("basis_up_to: negative depth");
    const int d = ctx.d(), n = ctx.n;
    std::vector<SuperMonomial> out;
    SuperMonomial cur = unit_monomial(d, n);
    auto rec_beta = [&](auto&& self, int i, int budget) -> void {
        if (i == n) {
            if (in_part(cur, part)) out.push_back(cur);
            return;
        }
        for (int b = 0; b <= budget; ++b) {
            cur.beta[static_cast<std::size_t>(i)] = b;
            self(self, i + 1, budget - b);
        }
        cur.beta[static_cast<std::size_t>(i)] = 0;
    };
    auto rec_gamma = [&](auto&& self, int j, int budget) -> void {
        if (j == d) {
            rec_beta(rec_beta, 0, budget);
            return;
        }
        for (int g = 0; g <= 1 && g <= budget; ++g) {
            cur.gamma[static_cast<std::size_t>(j)] = static_cast<std::uint8_t>(g);
            self(self, j + 1, budget - g);
        }
        cur.gamma[static_cast<std::size_t>(j)] = 0;
    };
    rec_gamma(rec_gamma, 0, depth);
    std::stable_sort(out.begin(), out.end(), [](const SuperMonomial& a, const SuperMonomial& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return a < b;
    });
    return out;
}

/// <theta^a t^b | theta^s t^r> = b! delta_{as} delta_{br}, conjugate-linear in the first slot.
inline FieldScalar spinor_inner(const SuperPoly& p, const SuperPoly& q) {
    FieldScalar s;
    for (const auto& [m, c] : p.terms()) {
        auto it = q.terms().find(m);
        if (it == q.terms().end()) continue;
        Rational f(1);
        for (int b : m.beta) f *= factorial(b);
        s += c.conj() * it->second * FieldScalar(f);
    }
    return s;
}

}  // namespace osprep
