#pragma once

// Root vectors and structure constants of osp(m|2n) for either positive
// system, extracted from the matrix realization.

#include "osprep/rootsys.hpp"
#include "osprep/supermatrix.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

namespace osprep {

/// Sparse combination of structure-table basis elements.
struct LieTerm {
    int index;
    Rational coef;
};
using LieElem = std::vector<LieTerm>;

/// Basis: X_0..X_{P-1} (positive root vectors), Y_0..Y_{P-1}, h_1..h_{d+n}
/// where h_j is dual to eps_j / delta_{j-d} on the diagonal.
class Structure {
public:
    static const Structure& get(Context ctx, Convention conv) {
        static std::mutex mu;
        static std::map<std::pair<Context, Convention>, std::unique_ptr<Structure>> cache;
        std::lock_guard<std::mutex> lock(mu);
        auto key = std::make_pair(ctx, conv);
        auto it = cache.find(key);
        if (it == cache.end()) it = cache.emplace(key, std::unique_ptr<Structure>(new Structure(ctx, conv))).first;
        return *it->second;
    }

    const Context& context() const { return ctx_; }
    Convention convention() const { return conv_; }
    const RootSystem& roots() const { return rs_; }

    int positive_count() const { return static_cast<int>(root_.size()); }
    int rank() const { return ctx_.rank(); }
    int basis_size() const { return 2 * positive_count() + rank(); }

    const Weight& root(int a) const { return root_.at(static_cast<std::size_t>(a)); }
    bool odd(int a) const { return odd_.at(static_cast<std::size_t>(a)); }
    const Rational& root_height(int a) const { return height_.at(static_cast<std::size_t>(a)); }
    const SuperMatrix& X(int a) const { return X_.at(static_cast<std::size_t>(a)); }
    const SuperMatrix& Y(int a) const { return Y_.at(static_cast<std::size_t>(a)); }
    /// Position of simple root k (0-based, in the order of roots().simple).
    int simple(int k) const { return simple_.at(static_cast<std::size_t>(k)); }
    /// Index of a positive root by weight, or -1.
    int find_root(const Weight& w) const {
        for (int a = 0; a < positive_count(); ++a)
            if (root_[static_cast<std::size_t>(a)] == w) return a;
        return -1;
    }

    int x_index(int a) const { return a; }
    int y_index(int a) const { return positive_count() + a; }
    int h_index(int j) const { return 2 * positive_count() + j; }

    bool is_x(int i) const { return i < positive_count(); }
    bool is_y(int i) const { return i >= positive_count() && i < 2 * positive_count(); }
    bool is_h(int i) const { return i >= 2 * positive_count(); }
    int root_of(int i) const { return is_x(i) ? i : i - positive_count(); }

    int basis_parity(int i) const { return is_h(i) ? 0 : (odd(root_of(i)) ? 1 : 0); }
    Weight basis_weight(int i) const {
        if (is_h(i)) return Weight(ctx_);
        return is_x(i) ? root(i) : -root(root_of(i));
    }

    const SuperMatrix& basis_matrix(int i) const {
        if (is_x(i)) return X(i);
        if (is_y(i)) return Y(root_of(i));
        return h_.at(static_cast<std::size_t>(i - 2 * positive_count()));
    }

    /// [b_i, b_j] expanded in the basis.
    const LieElem& bracket(int i, int j) const {
        return table_.at(static_cast<std::size_t>(i) * static_cast<std::size_t>(basis_size()) + static_cast<std::size_t>(j));
    }

    /// lambda(h) for the Cartan part of an element.
    Rational evaluate_cartan(const Weight& lam, const LieElem& e) const {
        Rational s;
        for (const auto& t : e) {
            if (!is_h(t.index)) continue;
            int j = t.index - 2 * positive_count();
            s += t.coef * (j < ctx_.d() ? lam.k(j + 1) : lam.l(j - ctx_.d() + 1));
        }
        return s;
    }

    /// Expands a matrix of osp in the basis; throws if it does not lie in the span.
    LieElem decompose(const SuperMatrix& mat) const {
        LieElem out;
        SuperMatrix rest = mat;
        for (int i = 0; i < 2 * positive_count(); ++i) {
            const auto& [p, q] = pivot_.at(static_cast<std::size_t>(i));
            const Rational& v = mat.at(p, q);
            if (v.is_zero()) continue;
            Rational c = v / basis_matrix(i).at(p, q);
            out.push_back({i, c});
            rest -= c * basis_matrix(i);
        }
        for (int j = 0; j < rank(); ++j) {
            int pos = j < ctx_.d() ? j + 1 : ctx_.m + (j - ctx_.d()) + 1;
            Rational c = rest.at(pos, pos);
            if (c.is_zero()) continue;
            out.push_back({h_index(j), c});
            rest -= c * h_.at(static_cast<std::size_t>(j));
        }
        if (!rest.is_zero()) throw std::logic_error("Structure::decompose: matrix outside osp: " + mat.str());
        std::sort(out.begin(), out.end(), [](const LieTerm& a, const LieTerm& b) { return a.index < b.index; });
        return out;
    }

    SuperMatrix to_matrix(const LieElem& e) const {
        SuperMatrix s(ctx_);
        for (const auto& t : e) s += t.coef * basis_matrix(t.index);
        return s;
    }

    /// Simple Chevalley triples in this convention, H = [X, Y].
    SuperMatrix simple_H(int k) const { return bracket_matrix(X(simple(k)), Y(simple(k))); }

private:
    static SuperMatrix bracket_matrix(const SuperMatrix& a, const SuperMatrix& b) { return osprep::bracket(a, b); }

    /// One-dimensional root space of gamma, normalized to first nonzero entry 1.
    static SuperMatrix root_space(Context ctx, const Weight& gamma) {
        std::vector<std::pair<int, int>> cand;
        for (int p = 1; p <= ctx.dim(); ++p)
            for (int q = 1; q <= ctx.dim(); ++q)
                if (index_weight(ctx, p) - index_weight(ctx, q) == gamma) cand.emplace_back(p, q);
        std::size_t nn = static_cast<std::size_t>(ctx.dim() * ctx.dim());
        Matrix<Rational> lin(nn, cand.size());
        for (std::size_t c = 0; c < cand.size(); ++c) {
            SuperMatrix def = osp_defect(SuperMatrix::unit(ctx, cand[c].first, cand[c].second));
            for (int p = 1; p <= ctx.dim(); ++p)
                for (int q = 1; q <= ctx.dim(); ++q)
                    lin.at(static_cast<std::size_t>((p - 1) * ctx.dim() + (q - 1)), c) = def.at(p, q);
        }
        auto ker = kernel(lin);
        if (ker.size() != 1)
            throw std::logic_error("root space of " + gamma.str() + " has dimension " + std::to_string(ker.size()));
        SuperMatrix s(ctx);
        Rational lead;
        for (std::size_t c = 0; c < cand.size(); ++c) {
            if (ker[0][c].is_zero()) continue;
            if (lead.is_zero()) lead = ker[0][c];
            s.at(cand[c].first, cand[c].second) = ker[0][c] / lead;
        }
        return s;
    }

    Structure(Context ctx, Convention conv) : ctx_(ctx), conv_(conv), rs_(build_root_system(ctx, conv)) {
        // PBW order: by height, then lexicographically by coordinates
        std::vector<std::pair<Rational, Root>> order;
        for (const auto& r : rs_.positive) order.emplace_back(height(rs_, r.weight), r);
        std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
            if (a.first != b.first) return a.first < b.first;
            return a.second.weight < b.second.weight;
        });
        for (auto& [h, r] : order) {
            height_.push_back(h);
            root_.push_back(r.weight);
            odd_.push_back(r.odd);
        }
        for (const auto& s : rs_.simple) simple_.push_back(find_root(s.weight));

        const int P = positive_count();
        X_.resize(static_cast<std::size_t>(P));
        Y_.resize(static_cast<std::size_t>(P));
        std::vector<bool> has_y(static_cast<std::size_t>(P), false);
        for (int a = 0; a < P; ++a) X_[static_cast<std::size_t>(a)] = root_space(ctx, root(a));

        if (conv == Convention::nonstandard) {
            auto ch = chevalley_nonstandard(ctx);
            for (std::size_t k = 0; k < ch.size(); ++k) {
                auto a = static_cast<std::size_t>(simple_[k]);
                X_[a] = ch[k].X;
                Y_[a] = ch[k].Y;
                has_y[a] = true;
            }
        } else {
            for (int a : simple_) {
                Y_[static_cast<std::size_t>(a)] = root_space(ctx, -root(a));
                has_y[static_cast<std::size_t>(a)] = true;
            }
        }
        // Y for composite roots: [X_a, X_b] = c X_g  =>  Y_g = -(1/c)[Y_a, Y_b]
        for (int g = 0; g < P; ++g) {
            if (has_y[static_cast<std::size_t>(g)]) continue;
            bool done = false;
            for (int a : simple_) {
                for (int b = 0; b < g && !done; ++b) {
                    if (!has_y[static_cast<std::size_t>(b)] || !(root(a) + root(b) == root(g))) continue;
                    SuperMatrix br = bracket_matrix(X(a), X(b));
                    if (br.is_zero()) continue;
                    Rational c = ratio(br, X(g));
                    Y_[static_cast<std::size_t>(g)] = Rational(-1) / c * bracket_matrix(Y(a), Y(b));
                    has_y[static_cast<std::size_t>(g)] = true;
                    done = true;
                }
                if (done) break;
            }
            if (!done) throw std::logic_error("Structure: no simple decomposition for root " + root(g).str());
        }

        for (int j = 0; j < rank(); ++j) {
            SuperMatrix h(ctx);
            if (j < ctx.d()) {
                h.at(j + 1, j + 1) = Rational(1);
                h.at(ctx.d() + j + 1, ctx.d() + j + 1) = Rational(-1);
            } else {
                int i = j - ctx.d() + 1;
                h.at(ctx.m + i, ctx.m + i) = Rational(1);
                h.at(ctx.m + ctx.n + i, ctx.m + ctx.n + i) = Rational(-1);
            }
            h_.push_back(h);
        }
        for (int i = 0; i < 2 * P; ++i) {
            const SuperMatrix& m = basis_matrix(i);
            bool found = false;
            for (int p = 1; p <= ctx.dim() && !found; ++p)
                for (int q = 1; q <= ctx.dim() && !found; ++q)
                    if (!m.at(p, q).is_zero()) {
                        pivot_.emplace_back(p, q);
                        found = true;
                    }
        }
        const int B = basis_size();
        table_.resize(static_cast<std::size_t>(B) * static_cast<std::size_t>(B));
        for (int i = 0; i < B; ++i)
            for (int j = 0; j < B; ++j)
                table_[static_cast<std::size_t>(i) * static_cast<std::size_t>(B) + static_cast<std::size_t>(j)] =
                    decompose(bracket_matrix(basis_matrix(i), basis_matrix(j)));
    }

    /// c with a = c * b for proportional matrices.
    static Rational ratio(const SuperMatrix& a, const SuperMatrix& b) {
        for (int p = 1; p <= a.dim(); ++p)
            for (int q = 1; q <= a.dim(); ++q)
                if (!b.at(p, q).is_zero()) {
                    Rational c = a.at(p, q) / b.at(p, q);
                    if (!(a == c * b)) throw std::logic_error("Structure::ratio: not proportional");
                    return c;
                }
        throw std::logic_error("Structure::ratio: zero matrix");
    }

    Context ctx_;
    Convention conv_;
    RootSystem rs_;
    std::vector<Weight> root_;
    std::vector<bool> odd_;
    std::vector<Rational> height_;
    std::vector<int> simple_;
    std::vector<SuperMatrix> X_, Y_, h_;
    std::vector<std::pair<int, int>> pivot_;
    std::vector<LieElem> table_;
};

}  // namespace osprep
