#pragma once

// Weights of osp(m|2n) in the (eps_1..eps_d, delta_1..delta_n) basis.

#include "osprep/rational.hpp"

#include <compare>
#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace osprep {

struct Context {
    int m = 1;
    int n = 0;

    int d() const { return m / 2; }
    bool m_odd() const { return m % 2 == 1; }
    /// Rank of osp(m|2n): d + n.
    int rank() const { return d() + n; }
    /// Dimension of the defining representation.
    int dim() const { return m + 2 * n; }

    friend bool operator==(const Context&, const Context&) = default;
    friend auto operator<=>(const Context&, const Context&) = default;
};

inline void validate_context(const Context& c) {
    if (c.m < 1) throw std::invalid_argument("context: m must be positive");
    if (c.n < 0) throw std::invalid_argument("context: n must be non-negative");
}

class Weight {
public:
    Weight() = default;
    explicit Weight(Context ctx) : ctx_(ctx), eps_(static_cast<std::size_t>(ctx.d())), delta_(static_cast<std::size_t>(ctx.n)) {
        validate_context(ctx);
    }
    Weight(Context ctx, std::vector<Rational> eps, std::vector<Rational> delta)
        : ctx_(ctx), eps_(std::move(eps)), delta_(std::move(delta)) {
        validate_context(ctx);
        if (eps_.size() != static_cast<std::size_t>(ctx.d()) || delta_.size() != static_cast<std::size_t>(ctx.n))
            throw std::invalid_argument("Weight: coordinate count does not match context");
    }

    /// eps_j, 1-based.
    static Weight eps_unit(Context ctx, int j) {
        Weight w(ctx);
        if (j < 1 || j > ctx.d()) throw std::out_of_range("Weight::eps_unit: index out of range");
        w.eps_[static_cast<std::size_t>(j - 1)] = Rational(1);
        return w;
    }
    /// delta_i, 1-based.
    static Weight delta_unit(Context ctx, int i) {
        Weight w(ctx);
        if (i < 1 || i > ctx.n) throw std::out_of_range("Weight::delta_unit: index out of range");
        w.delta_[static_cast<std::size_t>(i - 1)] = Rational(1);
        return w;
    }

    const Context& context() const { return ctx_; }
    const std::vector<Rational>& eps() const { return eps_; }
    const std::vector<Rational>& delta() const { return delta_; }
    /// 1-based accessors.
    const Rational& k(int j) const { return eps_.at(static_cast<std::size_t>(j - 1)); }
    const Rational& l(int i) const { return delta_.at(static_cast<std::size_t>(i - 1)); }
    Rational& k(int j) { return eps_.at(static_cast<std::size_t>(j - 1)); }
    Rational& l(int i) { return delta_.at(static_cast<std::size_t>(i - 1)); }

    bool is_zero() const {
        for (const auto& x : eps_)
            if (!x.is_zero()) return false;
        for (const auto& x : delta_)
            if (!x.is_zero()) return false;
        return true;
    }

    Weight& operator+=(const Weight& o) {
        same(o);
        for (std::size_t j = 0; j < eps_.size(); ++j) eps_[j] += o.eps_[j];
        for (std::size_t i = 0; i < delta_.size(); ++i) delta_[i] += o.delta_[i];
        return *this;
    }
    Weight& operator-=(const Weight& o) {
        same(o);
        for (std::size_t j = 0; j < eps_.size(); ++j) eps_[j] -= o.eps_[j];
        for (std::size_t i = 0; i < delta_.size(); ++i) delta_[i] -= o.delta_[i];
        return *this;
    }
    Weight& operator*=(const Rational& c) {
        for (auto& x : eps_) x *= c;
        for (auto& x : delta_) x *= c;
        return *this;
    }
    Weight operator-() const {
        Weight w = *this;
        w *= Rational(-1);
        return w;
    }
    friend Weight operator+(Weight a, const Weight& b) { return a += b; }
    friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
    friend Weight operator*(const Rational& c, Weight w) { return w *= c; }
    friend Weight operator*(Weight w, const Rational& c) { return w *= c; }

    friend bool operator==(const Weight& a, const Weight& b) {
        return a.ctx_ == b.ctx_ && a.eps_ == b.eps_ && a.delta_ == b.delta_;
    }
    friend std::strong_ordering operator<=>(const Weight& a, const Weight& b) {
        if (auto c = a.ctx_ <=> b.ctx_; c != 0) return c;
        if (auto c = a.eps_ <=> b.eps_; c != 0) return c;
        return a.delta_ <=> b.delta_;
    }

    /// "(k_1, ..., k_d | l_1, ..., l_n)".
    friend std::ostream& operator<<(std::ostream& os, const Weight& w) { return os << w.str(); }

    std::string str() const {
        std::string s = "(";
        for (std::size_t j = 0; j < eps_.size(); ++j) s += (j ? ", " : "") + eps_[j].str();
        s += " | ";
        for (std::size_t i = 0; i < delta_.size(); ++i) s += (i ? ", " : "") + delta_[i].str();
        return s + ")";
    }

    void same(const Weight& o) const {
        if (!(ctx_ == o.ctx_)) throw std::invalid_argument("Weight: context mismatch");
    }

private:
    Context ctx_;
    std::vector<Rational> eps_;
    std::vector<Rational> delta_;
};

/// <a,b> = sum 1/2 a_j b_j - sum 1/2 c_i e_i.
inline Rational inner(const Weight& a, const Weight& b) {
    a.same(b);
    Rational s;
    for (std::size_t j = 0; j < a.eps().size(); ++j) s += a.eps()[j] * b.eps()[j];
    for (std::size_t i = 0; i < a.delta().size(); ++i) s -= a.delta()[i] * b.delta()[i];
    return s / Rational(2);
}

enum class FundKind { so_odd, so_even, sp };

/// omega_k (so kinds) or nu_k (sp), with omega_0 = nu_0 = 0.
inline Weight fundamental(FundKind kind, int k, Context ctx) {
    Weight w(ctx);
    int d = ctx.d();
    if (kind == FundKind::sp) {
        if (k < 0 || k > ctx.n) throw std::out_of_range("fundamental: sp index out of range");
        for (int i = 1; i <= k; ++i) w.l(i) = Rational(1);
        return w;
    }
    if (k < 0 || k > d) throw std::out_of_range("fundamental: so index out of range");
    if (k == 0) return w;
    if (kind == FundKind::so_even && d <= 1)
        throw std::out_of_range("fundamental: so(2d) with d > 1 required for this index");
    Rational half(1, 2);
    if (k == d) {
        for (int j = 1; j <= d; ++j) w.k(j) = half;
    } else if (kind == FundKind::so_even && k == d - 1) {
        for (int j = 1; j < d; ++j) w.k(j) = half;
        w.k(d) = -half;
    } else {
        for (int j = 1; j <= k; ++j) w.k(j) = Rational(1);
    }
    return w;
}

inline Weight omega(int k, Context ctx) {
    return fundamental(ctx.m_odd() ? FundKind::so_odd : FundKind::so_even, k, ctx);
}
/// 1/2(eps_1 + ... + eps_d), the top spinor weight for either parity of m.
inline Weight omega_top(Context ctx) {
    Weight w(ctx);
    for (int j = 1; j <= ctx.d(); ++j) w.k(j) = Rational(1, 2);
    return w;
}
inline Weight nu(int l, Context ctx) { return fundamental(FundKind::sp, l, ctx); }

inline Weight rho(Context ctx) {
    Weight w(ctx);
    Rational half_m(ctx.m, 2);
    for (int j = 1; j <= ctx.d(); ++j) w.k(j) = half_m - Rational(j);
    for (int i = 1; i <= ctx.n; ++i) w.l(i) = Rational(1 + ctx.n - i) - half_m;
    return w;
}

inline Rational casimir_eigenvalue(const Weight& lam) {
    Weight r = rho(lam.context());
    return inner(lam, lam + Rational(2) * r);
}

/// lambda_j = k_j - k_{j+1} (j < d), lambda_d = 2 k_d; sum lambda_j omega_j
/// reproduces the weight with the odd-type omega_d = 1/2 sum eps_j.
inline std::vector<long> fundamental_coefficients(const Weight& lam) {
    const Context& c = lam.context();
    int d = c.d();
    if (!c.m_odd() && d >= 1) {
        if (lam.k(d).sign() < 0)
            throw std::invalid_argument("fundamental_coefficients: unsupported so(2d) weight " + lam.str());
    }
    std::vector<long> out(static_cast<std::size_t>(d));
    for (int j = 1; j < d; ++j) {
        Rational v = lam.k(j) - lam.k(j + 1);
        if (!v.is_integer()) throw std::invalid_argument("fundamental_coefficients: non-integral weight " + lam.str());
        out[static_cast<std::size_t>(j - 1)] = v.to_long();
    }
    if (d >= 1) {
        Rational v = Rational(2) * lam.k(d);
        if (!v.is_integer()) throw std::invalid_argument("fundamental_coefficients: non-integral weight " + lam.str());
        out[static_cast<std::size_t>(d - 1)] = v.to_long();
    }
    return out;
}

/// Inverse of fundamental_coefficients.
inline Weight from_fundamental_coefficients(const std::vector<long>& lams, Context ctx) {
    Weight w(ctx);
    int d = ctx.d();
    if (lams.size() != static_cast<std::size_t>(d)) throw std::invalid_argument("from_fundamental_coefficients: length");
    for (int j = 1; j <= d; ++j) {
        Rational c(lams[static_cast<std::size_t>(j - 1)]);
        if (j == d) {
            w += c * omega_top(ctx);
        } else {
            for (int i = 1; i <= j; ++i) w.k(i) += c;
        }
    }
    return w;
}

struct DominanceReport {
    bool so_integral = false;
    bool so_dominant = false;
    bool osp_consistent = false;
    std::string violation;  // first violated condition, empty when all hold
};

/// so(m) integrality and dominance of the eps-part, and the osp consistency
/// condition on highest weights in the eps - delta simple root convention.
inline DominanceReport dominance_checks(const Weight& w) {
    const Context& c = w.context();
    int d = c.d();
    DominanceReport r;
    auto fail = [&](const std::string& why) {
        if (r.violation.empty()) r.violation = why;
    };

    bool all_int = true, all_half = true;
    for (const auto& k : w.eps()) {
        all_int = all_int && k.is_integer();
        all_half = all_half && k.is_half_integer();
    }
    r.so_integral = all_int || (all_half && d > 0);
    if (!r.so_integral) fail("eps coordinates must be all integers or all half-integers");

    r.so_dominant = r.so_integral;
    for (int j = 1; j + 1 <= d; ++j) {
        bool ok = (!c.m_odd() && j + 1 == d) ? w.k(j) >= w.k(j + 1).abs() : w.k(j) >= w.k(j + 1);
        if (!ok) {
            r.so_dominant = false;
            fail("k_" + std::to_string(j) + " >= " + (!c.m_odd() && j + 1 == d ? "|k_" : "k_") +
                 std::to_string(j + 1) + (!c.m_odd() && j + 1 == d ? "|" : "") + " violated");
        }
    }
    if (c.m_odd() && d >= 1 && w.k(d).sign() < 0) {
        r.so_dominant = false;
        fail("k_d >= 0 violated");
    }

    bool osp = r.so_dominant;
    bool l_int = true, l_half = true;
    for (const auto& l : w.delta()) {
        l_int = l_int && l.is_integer();
        l_half = l_half && l.is_half_integer();
    }
    for (int i = 1; i < c.n; ++i) {
        if (w.l(i) < w.l(i + 1)) {
            osp = false;
            fail("l_" + std::to_string(i) + " >= l_" + std::to_string(i + 1) + " violated");
        }
    }
    if (d == 0) {
        if (!l_int && !l_half) {
            osp = false;
            fail("delta coordinates must be all integers or all half-integers");
        }
        if (l_int && c.n >= 1 && w.l(c.n).sign() < 0) {
            osp = false;
            fail("l_n >= 0 violated");
        }
    } else if (all_int) {
        if (!l_int) {
            osp = false;
            fail("delta coordinates must be integers");
        }
        if (c.n >= 1 && w.l(c.n).sign() < 0) {
            osp = false;
            fail("l_n >= 0 violated");
        }
        if (!c.m_odd() && d >= 1 && w.k(d).sign() < 0) {
            osp = false;
            fail("k_d >= 0 violated");
        }
        if (d >= 1 && osp && w.k(d) < Rational(c.n)) {
            long kd = w.k(d).to_long();
            if (kd >= 0 && !w.l(static_cast<int>(kd) + 1).is_zero()) {
                osp = false;
                fail("l_{k_d+1} = 0 required since k_d < n");
            }
        }
    } else if (all_half && d > 0) {
        if (!l_half) {
            osp = false;
            fail("delta coordinates must be half-integers when eps coordinates are");
        }
    }
    r.osp_consistent = osp;
    return r;
}

/// One element of the index set I_lambda.
struct IndexSetEntry {
    std::vector<int> bits;
    Weight mu;
};

inline std::vector<IndexSetEntry> enumerate_I(const Weight& lam) {
    auto rep = dominance_checks(lam);
    if (!rep.so_dominant) throw std::invalid_argument("enumerate_I: weight not so-dominant: " + rep.violation);
    Context c = lam.context();
    int d = c.d();
    auto lams = fundamental_coefficients(lam);
    std::vector<IndexSetEntry> out;
    for (unsigned mask = 0; mask < (1u << d); ++mask) {
        std::vector<int> bits(static_cast<std::size_t>(d));
        for (int j = 0; j < d; ++j) bits[static_cast<std::size_t>(j)] = (mask >> (d - 1 - j)) & 1u;
        bool ok = true;
        for (int j = 0; j < d && ok; ++j) {
            long muj = j + 1 < d ? bits[static_cast<std::size_t>(j)] - bits[static_cast<std::size_t>(j + 1)]
                                 : 2L * bits[static_cast<std::size_t>(j)];
            ok = muj <= lams[static_cast<std::size_t>(j)];
        }
        if (!ok) continue;
        Weight mu(c);
        for (int j = 0; j < d; ++j) mu.k(j + 1) = Rational(bits[static_cast<std::size_t>(j)]);
        out.push_back({std::move(bits), std::move(mu)});
    }
    return out;
}

/// Parity of the number of nonzero coordinates of a 0/1 eps-pattern.
inline int sigma(const Weight& kappa) {
    int count = 0;
    for (const auto& x : kappa.eps()) {
        if (x == Rational(1)) ++count;
        else if (!x.is_zero()) throw std::invalid_argument("sigma: eps coordinates must be 0 or 1");
    }
    for (const auto& x : kappa.delta())
        if (!x.is_zero()) throw std::invalid_argument("sigma: delta coordinates must vanish");
    return count % 2;
}

}  // namespace osprep
