#pragma once

// osp(m|2n) inside gl(m|2n): metric, membership, graded bracket and the
// Chevalley generators of the eps - delta simple root system.

#include "osprep/linalg.hpp"
#include "osprep/weight.hpp"

#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace osprep {

class SuperMatrix {
public:
    SuperMatrix() = default;
    explicit SuperMatrix(Context ctx)
        : ctx_(ctx), a_(static_cast<std::size_t>(ctx.dim()), static_cast<std::size_t>(ctx.dim())) {}

    /// E_{pq}, 1-based.
    static SuperMatrix unit(Context ctx, int p, int q, Rational c = Rational(1)) {
        SuperMatrix s(ctx);
        s.at(p, q) = std::move(c);
        return s;
    }

    const Context& context() const { return ctx_; }
    int dim() const { return ctx_.dim(); }
    /// 1-based entry access.
    Rational& at(int p, int q) { return a_.at(static_cast<std::size_t>(p - 1), static_cast<std::size_t>(q - 1)); }
    const Rational& at(int p, int q) const {
        return a_.at(static_cast<std::size_t>(p - 1), static_cast<std::size_t>(q - 1));
    }
    const Matrix<Rational>& raw() const { return a_; }

    /// Index parity: rows/cols 1..m even, m+1..m+2n odd.
    int index_parity(int p) const { return p > ctx_.m ? 1 : 0; }

    bool is_zero() const {
        for (int p = 1; p <= dim(); ++p)
            for (int q = 1; q <= dim(); ++q)
                if (!at(p, q).is_zero()) return false;
        return true;
    }

    /// 0 or 1 for homogeneous matrices (0 for the zero matrix), nullopt otherwise.
    std::optional<int> parity() const {
        std::optional<int> par;
        for (int p = 1; p <= dim(); ++p)
            for (int q = 1; q <= dim(); ++q) {
                if (at(p, q).is_zero()) continue;
                int x = (index_parity(p) + index_parity(q)) % 2;
                if (par && *par != x) return std::nullopt;
                par = x;
            }
        return par ? par : std::optional<int>(0);
    }

    SuperMatrix& operator+=(const SuperMatrix& o) {
        check(o);
        for (int p = 1; p <= dim(); ++p)
            for (int q = 1; q <= dim(); ++q)
                if (!o.at(p, q).is_zero()) at(p, q) += o.at(p, q);
        return *this;
    }
    SuperMatrix& operator-=(const SuperMatrix& o) {
        check(o);
        for (int p = 1; p <= dim(); ++p)
            for (int q = 1; q <= dim(); ++q)
                if (!o.at(p, q).is_zero()) at(p, q) -= o.at(p, q);
        return *this;
    }
    SuperMatrix& operator*=(const Rational& c) {
        for (int p = 1; p <= dim(); ++p)
            for (int q = 1; q <= dim(); ++q)
                if (!at(p, q).is_zero()) at(p, q) *= c;
        return *this;
    }
    friend SuperMatrix operator+(SuperMatrix a, const SuperMatrix& b) { return a += b; }
    friend SuperMatrix operator-(SuperMatrix a, const SuperMatrix& b) { return a -= b; }
    friend SuperMatrix operator*(const Rational& c, SuperMatrix a) { return a *= c; }
    SuperMatrix operator-() const { return Rational(-1) * *this; }

    friend SuperMatrix operator*(const SuperMatrix& a, const SuperMatrix& b) {
        a.check(b);
        SuperMatrix r(a.ctx_);
        int n = a.dim();
        for (int p = 1; p <= n; ++p)
            for (int k = 1; k <= n; ++k) {
                if (a.at(p, k).is_zero()) continue;
                for (int q = 1; q <= n; ++q)
                    if (!b.at(k, q).is_zero()) r.at(p, q) += a.at(p, k) * b.at(k, q);
            }
        return r;
    }

    friend bool operator==(const SuperMatrix& a, const SuperMatrix& b) { return a.ctx_ == b.ctx_ && a.a_ == b.a_; }

    SuperMatrix transpose() const {
        SuperMatrix t(ctx_);
        for (int p = 1; p <= dim(); ++p)
            for (int q = 1; q <= dim(); ++q) t.at(q, p) = at(p, q);
        return t;
    }

    /// (a b; c d)^{sT} = (a^T  -c^T; b^T  d^T).
    SuperMatrix supertranspose() const {
        SuperMatrix t(ctx_);
        for (int p = 1; p <= dim(); ++p)
            for (int q = 1; q <= dim(); ++q) {
                if (at(p, q).is_zero()) continue;
                bool c_block = index_parity(p) == 1 && index_parity(q) == 0;
                t.at(q, p) = c_block ? -at(p, q) : at(p, q);
            }
        return t;
    }

    friend std::ostream& operator<<(std::ostream& os, const SuperMatrix& w) { return os << w.str(); }

    std::string str() const {
        std::string s;
        for (int p = 1; p <= dim(); ++p)
            for (int q = 1; q <= dim(); ++q)
                if (!at(p, q).is_zero())
                    s += (s.empty() ? "" : " + ") + at(p, q).str() + "*E" + std::to_string(p) + "," + std::to_string(q);
        return s.empty() ? "0" : s;
    }

private:
    void check(const SuperMatrix& o) const {
        if (!(ctx_ == o.ctx_)) throw std::invalid_argument("SuperMatrix: dimension mismatch");
    }

    Context ctx_;
    Matrix<Rational> a_;
};

inline SuperMatrix metric(Context ctx) {
    SuperMatrix g(ctx);
    int d = ctx.d(), m = ctx.m, n = ctx.n;
    for (int j = 1; j <= d; ++j) {
        g.at(j, d + j) = Rational(1);
        g.at(d + j, j) = Rational(1);
    }
    if (ctx.m_odd()) g.at(m, m) = Rational(1);
    for (int i = 1; i <= n; ++i) {
        g.at(m + i, m + n + i) = Rational(1);
        g.at(m + n + i, m + i) = Rational(-1);
    }
    return g;
}

/// A^{sT} g + g A.
inline SuperMatrix osp_defect(const SuperMatrix& a) {
    SuperMatrix g = metric(a.context());
    return a.supertranspose() * g + g * a;
}

inline bool is_osp(const SuperMatrix& a) { return osp_defect(a).is_zero(); }

/// [A,B] = AB - (-1)^{|A||B|} BA for homogeneous A, B.
inline SuperMatrix bracket(const SuperMatrix& a, const SuperMatrix& b) {
    auto pa = a.parity(), pb = b.parity();
    if (!pa || !pb) throw std::invalid_argument("bracket: non-homogeneous input");
    SuperMatrix r = a * b;
    if (*pa * *pb == 1)
        r += b * a;
    else
        r -= b * a;
    return r;
}

/// Weight of the basis vector e_p of the defining representation, 1-based.
inline Weight index_weight(Context ctx, int p) {
    int d = ctx.d(), m = ctx.m, n = ctx.n;
    if (p <= d) return Weight::eps_unit(ctx, p);
    if (p <= 2 * d) return -Weight::eps_unit(ctx, p - d);
    if (p <= m) return Weight(ctx);
    if (p <= m + n) return Weight::delta_unit(ctx, p - m);
    return -Weight::delta_unit(ctx, p - m - n);
}

/// lambda(H) for a diagonal H: sum a_j H_{jj} + sum b_i H_{m+i,m+i}.
inline Rational evaluate(const Weight& lam, const SuperMatrix& h) {
    const Context& c = lam.context();
    Rational s;
    for (int j = 1; j <= c.d(); ++j) s += lam.k(j) * h.at(j, j);
    for (int i = 1; i <= c.n; ++i) s += lam.l(i) * h.at(c.m + i, c.m + i);
    return s;
}

struct ChevalleyTriple {
    SuperMatrix X, Y, H;
    bool odd = false;
};

/// X, Y, H for the simple roots alpha_1..alpha_{d+n}, exactly as in the
/// eps - delta realization.
inline std::vector<ChevalleyTriple> chevalley_nonstandard(Context ctx) {
    validate_context(ctx);
    if (ctx.n < 1) throw std::invalid_argument("chevalley: n >= 1 required");
    int d = ctx.d(), m = ctx.m, n = ctx.n;
    auto E = [&](int p, int q) { return SuperMatrix::unit(ctx, p, q); };
    std::vector<ChevalleyTriple> out;
    for (int j = 1; j < d; ++j) {
        SuperMatrix x = E(j, j + 1) - E(d + j + 1, d + j);
        SuperMatrix h = E(j, j) - E(j + 1, j + 1) - E(j + d, j + d) + E(j + d + 1, j + d + 1);
        out.push_back({x, x.transpose(), h, false});
    }
    if (d >= 1) {
        SuperMatrix x = E(d, m + 1) - E(m + n + 1, 2 * d);
        SuperMatrix y = -(E(m + 1, d) + E(2 * d, m + n + 1));
        SuperMatrix h = E(m + n + 1, m + n + 1) - E(m + 1, m + 1) - E(d, d) + E(2 * d, 2 * d);
        out.push_back({x, y, h, true});
    }
    for (int i = 1; i < n; ++i) {
        SuperMatrix x = E(m + i, m + i + 1) - E(m + n + i + 1, m + n + i);
        SuperMatrix h = E(m + i, m + i) - E(m + i + 1, m + i + 1) - E(m + n + i, m + n + i) +
                        E(m + n + i + 1, m + n + i + 1);
        out.push_back({x, x.transpose(), h, false});
    }
    SuperMatrix h = E(m + n, m + n) - E(m + 2 * n, m + 2 * n);
    if (ctx.m_odd())
        out.push_back({E(m, m + 2 * n) + E(m + n, m), -E(m + 2 * n, m) + E(m, m + n), h, true});
    else
        out.push_back({E(m + n, m + 2 * n), E(m + 2 * n, m + n), h, false});
    return out;
}

}  // namespace osprep
