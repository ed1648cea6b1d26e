#pragma once

// Tensor products S (x) K of a spinor module, realized on Lambda_{d|n}, with a
// finite-dimensional irreducible module K in the eps - delta convention.

#include "osprep/module.hpp"
#include "osprep/result.hpp"
#include "osprep/superpoly.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <utility>
#include <vector>

namespace osprep {

using TVec = Vec<FieldScalar>;

/// Monomial q (x) basis vector index of the K weight space `space`.
struct TensorBasisElem {
    SuperMonomial mono;
    int space = -1;
    std::size_t index = 0;
};

struct TensorWeightSpace {
    Weight weight;
    std::vector<TensorBasisElem> basis;
    std::map<std::pair<int, std::size_t>, std::size_t> pos;
    std::size_t dim() const { return basis.size(); }
};

/// Threads to use for independent per-weight work (OSPREP_THREADS, default 1).
inline unsigned worker_count() {
    if (const char* e = std::getenv("OSPREP_THREADS")) {
        long v = std::strtol(e, nullptr, 10);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    return 1;
}

inline void parallel_for(std::size_t count, const std::function<void(std::size_t)>& f) {
    unsigned t = std::min<unsigned>(worker_count(), static_cast<unsigned>(std::max<std::size_t>(count, 1)));
    if (t <= 1) {
        for (std::size_t i = 0; i < count; ++i) f(i);
        return;
    }
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < t; ++w)
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < count; i += t) f(i);
        });
    for (auto& th : pool) th.join();
}

class TensorProduct {
public:
    TensorProduct(Context ctx, Part part, const IrreducibleModule& K) : ctx_(ctx), part_(part), K_(&K) {
        if (K.convention() != Convention::nonstandard) throw std::invalid_argument("tensor: K must use the eps - delta convention");
        if (!K.closed()) throw std::invalid_argument("tensor: K must be finite dimensional (closed)");
        if (ctx.m_odd() && part != Part::all) throw std::invalid_argument("tensor: parts exist only for even m");
        if (!ctx.m_odd() && part == Part::all) throw std::invalid_argument("tensor: choose part plus or minus for even m");
        spinor_top_ = omega_top(ctx) - Rational(1, 2) * nu(ctx.n, ctx);
        if (part == Part::minus) spinor_top_ = weight_of(first_monomial(), ctx);
        top_ = spinor_top_ + K.highest_weight();
    }

    const Context& context() const { return ctx_; }
    Part part() const { return part_; }
    const IrreducibleModule& factor() const { return *K_; }
    const Structure& structure() const { return K_->structure(); }
    int rank() const { return ctx_.rank(); }
    const Weight& spinor_top() const { return spinor_top_; }
    const Weight& top() const { return top_; }
    const Weight& simple_root(int k) const { return K_->simple_root(k); }
    bool simple_odd(int k) const { return K_->simple_odd(k); }

    /// Height of top - nu in simple roots (nullopt if not a non-negative integer combination).
    std::optional<long> depth_of(const Weight& nu) const {
        auto co = simple_coordinates(structure().roots(), top_ - nu);
        long h = 0;
        for (const auto& x : co) {
            if (!x.is_integer() || x.sign() < 0) return std::nullopt;
            h += x.to_long();
        }
        return h;
    }

    const TensorWeightSpace& space(const Weight& nu) const {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = spaces_.find(nu);
        if (it != spaces_.end()) return it->second;
        return spaces_.emplace(nu, make_space(nu)).first->second;
    }
    std::size_t dim(const Weight& nu) const { return space(nu).dim(); }

    /// Nonzero weight spaces with depth <= D, in order of depth.
    std::vector<Weight> window(int D) const {
        std::vector<Weight> out;
        const int r = rank();
        std::vector<int> c(static_cast<std::size_t>(r), 0);
        for (int h = 0; h <= D; ++h) {
            auto rec = [&](auto&& self, int k, int left) -> void {
                if (k == r - 1) {
                    c[static_cast<std::size_t>(k)] = left;
                    Weight nu = top_;
                    for (int q = 0; q < r; ++q) nu -= Rational(c[static_cast<std::size_t>(q)]) * simple_root(q);
                    if (dim(nu) > 0) out.push_back(nu);
                    return;
                }
                for (int x = left; x >= 0; --x) {
                    c[static_cast<std::size_t>(k)] = x;
                    self(self, k + 1, left - x);
                }
            };
            rec(rec, 0, h);
        }
        return out;
    }

    /// Matrix of X_k (raise) or Y_k (lower) from W_nu to W_{nu +- alpha_k}.
    Matrix<FieldScalar> op_matrix(OpKind which, int k, const Weight& nu) const {
        if (which == OpKind::H) throw std::invalid_argument("tensor: H acts diagonally");
        const TensorWeightSpace& src = space(nu);
        Weight tw = which == OpKind::X ? nu + simple_root(k) : nu - simple_root(k);
        const TensorWeightSpace& tgt = space(tw);
        Matrix<FieldScalar> M(tgt.dim(), src.dim());
        for (std::size_t c = 0; c < src.dim(); ++c) {
            const auto& e = src.basis[c];
            // spinor factor
            SuperPoly img = act(ctx_, which, k + 1, SuperPoly(e.mono));
            for (const auto& [q, x] : img.terms()) {
                std::size_t r = locate(tgt, e.space, e.index, &q);
                M.at(r, c) += x;
            }
            // module factor, with the sign (-1)^{|op||q|}
            Vec<Rational> unit(K_->space(e.space).dim);
            unit[e.index] = Rational(1);
            auto [t, v] = which == OpKind::X ? K_->raise(k, e.space, unit) : K_->lower(k, e.space, unit);
            if (t < 0) continue;
            int sg = simple_odd(k) && e.mono.parity() ? -1 : 1;
            for (std::size_t i = 0; i < v.size(); ++i)
                if (!v[i].is_zero()) M.at(locate(tgt, t, i, &e.mono), c) += FieldScalar(Rational(sg) * v[i]);
        }
        return M;
    }

    TVec apply(OpKind which, int k, const Weight& nu, const TVec& v) const { return op_matrix(which, k, nu).apply(v); }

    /// Kernel of the stacked simple raising operators on W_nu.
    std::vector<TVec> primitive_space(const Weight& nu) const {
        const std::size_t n = dim(nu);
        std::vector<Matrix<FieldScalar>> blocks;
        std::size_t rows = 0;
        for (int k = 0; k < rank(); ++k) {
            blocks.push_back(op_matrix(OpKind::X, k, nu));
            rows += blocks.back().rows();
        }
        Matrix<FieldScalar> S(rows, n);
        std::size_t r0 = 0;
        for (const auto& b : blocks) {
            for (std::size_t r = 0; r < b.rows(); ++r)
                for (std::size_t c = 0; c < n; ++c) S.at(r0 + r, c) = b.at(r, c);
            r0 += b.rows();
        }
        return kernel(S);
    }

    /// Basis of (n- . W)_nu = span of Y_k W_{nu + alpha_k}.
    std::vector<TVec> lowerable_space(const Weight& nu) const {
        IncrementalBasis<FieldScalar> B(dim(nu));
        for (int k = 0; k < rank(); ++k) {
            Weight up = nu + simple_root(k);
            if (dim(up) == 0) continue;
            auto Y = op_matrix(OpKind::Y, k, up);
            for (std::size_t c = 0; c < Y.cols(); ++c) B.insert(Y.col(c));
        }
        return B.vectors();
    }

    /// Whether w (weight nu_w) lies in U(g) v for a primitive v of weight nu_v.
    bool membership(const Weight& nu_w, const TVec& w, const Weight& nu_v, const TVec& v) const {
        for (int k = 0; k < rank(); ++k)
            if (!is_zero_vec(apply(OpKind::X, k, nu_v, v))) throw std::invalid_argument("membership: generator is not primitive");
        auto gap = simple_coordinates(structure().roots(), nu_v - nu_w);
        std::vector<long> g;
        for (const auto& x : gap) {
            if (!x.is_integer() || x.sign() < 0) return is_zero_vec(w);
            g.push_back(x.to_long());
        }
        long total = 0;
        for (long x : g) total += x;
        // spans S_mu for mu = nu_v - beta, beta <= gap, by increasing height
        std::map<Weight, std::vector<TVec>> span;
        span[nu_v] = {v};
        const int r = rank();
        std::vector<long> c(static_cast<std::size_t>(r), 0);
        for (long h = 1; h <= total; ++h) {
            auto rec = [&](auto&& self, int k, long left) -> void {
                if (k == r) {
                    if (left != 0) return;
                    Weight mu = nu_v;
                    for (int q = 0; q < r; ++q) mu -= Rational(c[static_cast<std::size_t>(q)]) * simple_root(q);
                    std::size_t dm = dim(mu);
                    if (dm == 0) return;
                    IncrementalBasis<FieldScalar> B(dm);
                    for (int q = 0; q < r; ++q) {
                        if (c[static_cast<std::size_t>(q)] == 0) continue;
                        auto it = span.find(mu + simple_root(q));
                        if (it == span.end() || it->second.empty()) continue;
                        auto Y = op_matrix(OpKind::Y, q, it->first);
                        for (const auto& x : it->second) B.insert(Y.apply(x));
                    }
                    if (B.size()) span[mu] = B.vectors();
                    return;
                }
                for (long x = 0; x <= std::min(left, g[static_cast<std::size_t>(k)]); ++x) {
                    c[static_cast<std::size_t>(k)] = x;
                    self(self, k + 1, left - x);
                }
                c[static_cast<std::size_t>(k)] = 0;
            };
            rec(rec, 0, h);
        }
        auto it = span.find(nu_w);
        if (it == span.end()) return is_zero_vec(w);
        IncrementalBasis<FieldScalar> B(dim(nu_w));
        for (const auto& x : it->second) B.insert(x);
        return B.contains(w);
    }

    /// Coordinates of a (x) b for a spinor polynomial a and b in the K space idx.
    std::pair<Weight, TVec> embed(const SuperPoly& a, int idx, const Vec<Rational>& b) const {
        if (a.is_zero()) throw std::invalid_argument("embed: zero spinor factor");
        Weight nu = weight_of(a.terms().begin()->first, ctx_) + K_->space(idx).weight;
        const TensorWeightSpace& S = space(nu);
        TVec out(S.dim());
        for (const auto& [q, x] : a.terms())
            for (std::size_t i = 0; i < b.size(); ++i)
                if (!b[i].is_zero()) out[locate(S, idx, i, &q)] += x * FieldScalar(b[i]);
        return {nu, out};
    }

private:
    SuperMonomial first_monomial() const {
        SuperMonomial m = unit_monomial(ctx_.d(), ctx_.n);
        m.beta[0] = 1;
        return m;
    }

    TensorWeightSpace make_space(const Weight& nu) const {
        TensorWeightSpace S;
        S.weight = nu;
        for (std::size_t sp = 0; sp < K_->spaces().size(); ++sp) {
            const auto& ks = K_->spaces()[sp];
            auto m = monomial_of_weight(nu - ks.weight);
            if (!m || !in_part(*m, part_)) continue;
            for (std::size_t i = 0; i < ks.dim; ++i) {
                S.pos.emplace(std::make_pair(static_cast<int>(sp), i), S.basis.size());
                S.basis.push_back({*m, static_cast<int>(sp), i});
            }
        }
        return S;
    }

    static std::size_t locate(const TensorWeightSpace& S, int space, std::size_t index, const SuperMonomial* mono) {
        auto it = S.pos.find({space, index});
        if (it == S.pos.end() || (mono && !(S.basis[it->second].mono == *mono)))
            throw std::logic_error("tensor: image outside the weight space " + S.weight.str());
        return it->second;
    }

    Context ctx_;
    Part part_;
    const IrreducibleModule* K_;
    Weight spinor_top_, top_;
    mutable std::mutex mu_;
    mutable std::map<Weight, TensorWeightSpace> spaces_;
};

struct PrimitiveEntry {
    Weight weight;
    long depth = 0;
    std::vector<TVec> vectors;
};

struct PrimitiveReportRow {
    Weight weight;
    long depth = 0;
    std::size_t dim_w = 0, dim_primitive = 0, dim_lowerable = 0;
};

/// Per-weight Theorem-4 style report over the depth window.
inline std::vector<PrimitiveReportRow> primitive_report(const TensorProduct& W, int D) {
    auto win = W.window(D);
    std::vector<PrimitiveReportRow> rows(win.size());
    for (const auto& nu : win) {
        for (int k = 0; k < W.rank(); ++k) {
            W.dim(nu + W.simple_root(k));
            W.dim(nu - W.simple_root(k));
        }
    }
    parallel_for(win.size(), [&](std::size_t i) {
        const Weight& nu = win[i];
        rows[i] = {nu, *W.depth_of(nu), W.dim(nu), W.primitive_space(nu).size(), W.lowerable_space(nu).size()};
    });
    return rows;
}

struct BruteForceReport {
    DecompositionResult result;
    std::vector<PrimitiveEntry> primitives;
    /// (i, j): primitive j lies in U(g) applied to primitive i.
    std::vector<std::pair<std::size_t, std::size_t>> memberships;
    std::size_t max_primitive_dim = 0;
    bool theorem4_holds = true;
    bool character_checked = false;
    bool character_match = false;
    /// Weight where the truncated characters first disagree, if any.
    std::optional<Weight> character_mismatch;
    int depth = 0;
};

/// Primitive sweep, pairwise membership and truncated character comparison.
inline BruteForceReport brute_force_decompose(const TensorProduct& W, int D) {
    BruteForceReport rep;
    rep.depth = D;
    rep.result.ctx = W.context();
    auto rows = primitive_report(W, D);
    for (const auto& row : rows) {
        if (row.dim_primitive + row.dim_lowerable != row.dim_w) rep.theorem4_holds = false;
        if (row.dim_primitive == 0) continue;
        rep.primitives.push_back({row.weight, row.depth, W.primitive_space(row.weight)});
        rep.max_primitive_dim = std::max(rep.max_primitive_dim, row.dim_primitive);
    }
    const auto& P = rep.primitives;
    for (std::size_t i = 0; i < P.size(); ++i)
        for (std::size_t j = 0; j < P.size(); ++j) {
            if (i == j || P[j].depth <= P[i].depth) continue;
            for (const auto& v : P[i].vectors) {
                bool all = true;
                for (const auto& w : P[j].vectors)
                    if (!W.membership(P[j].weight, w, P[i].weight, v)) all = false;
                if (all) {
                    rep.memberships.emplace_back(i, j);
                    break;
                }
            }
        }
    for (const auto& p : P) rep.result.summands.push_back(summand_from_nonstandard(p.weight, static_cast<int>(p.vectors.size())));
    if (rep.memberships.empty()) {
        rep.result.shape = Shape::completely_reducible;
        std::map<Weight, std::size_t> sum;
        for (const auto& p : P) {
            IrreducibleModule L(p.weight, Convention::nonstandard, static_cast<int>(D - p.depth));
            for (const auto& sp : L.spaces()) sum[sp.weight] += sp.dim * p.vectors.size();
        }
        rep.character_checked = true;
        rep.character_match = true;
        auto flag = [&](const Weight& w) {
            rep.character_match = false;
            if (!rep.character_mismatch) rep.character_mismatch = w;
        };
        std::map<Weight, std::size_t> seen;
        for (const auto& row : rows) {
            seen[row.weight] = row.dim_w;
            auto it = sum.find(row.weight);
            if ((it == sum.end() ? 0 : it->second) != row.dim_w) flag(row.weight);
        }
        for (const auto& [w, s] : sum)
            if (s > 0 && !seen.count(w)) flag(w);
    } else {
        rep.result.shape = Shape::chain;
        const auto& [i, j] = rep.memberships.front();
        ChainInfo ch{P[i].weight, P[j].weight, {}};
        ch.notes.push_back("the submodule generated by the upper primitive vector contains the lower one");
        ch.notes.push_back("V / K_inner is isomorphic to K_upper");
        ch.notes.push_back("the quotient of the whole product by V is a quotient of a Verma module; its irreducibility is not asserted");
        rep.result.chain = ch;
    }
    return rep;
}

/// The vectors a_j (x) b_j of S+ (x) K_{k eps_1} at weight top - (alpha_1 + ... + alpha_{d+n}), m even, d >= 1.
struct WitnessData {
    Weight weight;
    std::vector<TVec> terms;  // a_j (x) b_j, j = 1..d+n+1
    std::vector<TVec> primitives;
    /// Coefficients of the primitive vector in the a_j (x) b_j basis, normalized to C_1 = 1.
    std::optional<std::vector<FieldScalar>> coefficients;
    /// Coefficients predicted by the closed form: 1, (-1)^j / k, ..., 2 (-1)^{d+n} / k, (-1)^{d+n} / k.
    std::vector<Rational> predicted;
};

inline WitnessData theorem8_witness(const TensorProduct& W, long k) {
    const Context& c = W.context();
    const int d = c.d(), n = c.n, r = d + n;
    if (c.m_odd() || d < 1 || W.part() != Part::plus) throw std::invalid_argument("witness: S+ with m = 2d, d >= 1 required");
    const IrreducibleModule& K = W.factor();
    WitnessData out;
    std::vector<SuperPoly> a(static_cast<std::size_t>(r) + 2);
    a[static_cast<std::size_t>(r) + 1] = SuperPoly(unit_monomial(d, n));
    for (int j = r; j >= 1; --j) a[static_cast<std::size_t>(j)] = act(c, OpKind::Y, j, a[static_cast<std::size_t>(j) + 1]);
    std::vector<std::pair<int, Vec<Rational>>> b(static_cast<std::size_t>(r) + 2);
    Vec<Rational> v1(1);
    v1[0] = Rational(1);
    b[1] = {0, v1};
    for (int j = 2; j <= r + 1; ++j) {
        auto [idx, v] = b[static_cast<std::size_t>(j) - 1];
        if (idx < 0) throw std::logic_error("witness: b vector vanished");
        b[static_cast<std::size_t>(j)] = K.lower(j - 2, idx, v);
    }
    for (int j = 1; j <= r + 1; ++j) {
        const auto& [idx, v] = b[static_cast<std::size_t>(j)];
        if (idx < 0 || a[static_cast<std::size_t>(j)].is_zero()) throw std::logic_error("witness: a or b vector vanished");
        auto [nu, x] = W.embed(a[static_cast<std::size_t>(j)], idx, v);
        out.weight = nu;
        out.terms.push_back(std::move(x));
    }
    out.primitives = W.primitive_space(out.weight);
    if (out.primitives.size() == 1) {
        const std::size_t dim = W.dim(out.weight);
        IncrementalBasis<FieldScalar> B(dim);
        for (const auto& t : out.terms) B.insert(t);
        if (B.size() == out.terms.size()) {
            auto co = B.coordinates(out.primitives[0]);
            if (co && !(*co)[0].is_zero()) {
                FieldScalar s = (*co)[0].inverse();
                std::vector<FieldScalar> cs;
                for (auto& x : *co) cs.push_back(x * s);
                out.coefficients = std::move(cs);
            }
        }
    }
    Rational K1(k);
    auto sg = [](int e) { return Rational(e % 2 == 0 ? 1 : -1); };
    out.predicted.push_back(Rational(1));
    for (int j = 1; j <= d - 1; ++j) out.predicted.push_back(sg(j) / K1);
    for (int i = 1; i <= n - 1; ++i) out.predicted.push_back(sg(d + i) / K1);
    out.predicted.push_back(Rational(2) * sg(d + n) / K1);
    out.predicted.push_back(sg(d + n) / K1);
    return out;
}

}  // namespace osprep
