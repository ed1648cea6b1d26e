#pragma once

// Irreducible highest weight modules built layer by layer from the simple
// root vectors. A vector of weight nu is stored through its images under the
// simple raising operators, which is faithful on the irreducible quotient.

#include "osprep/structure.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace osprep {

struct WeightSpace {
    Weight weight;
    int height = 0;
    int parity = 0;
    std::size_t dim = 0;
    /// Per simple root k: index of the space nu + alpha_k (or -1) and the
    /// matrices X_k : L_nu -> L_{nu+alpha_k}, Y_k : L_{nu+alpha_k} -> L_nu.
    std::vector<int> up;
    std::vector<Matrix<Rational>> X, Y;
};

class IrreducibleModule {
public:
    /// Builds all weight spaces with height(lambda - nu) <= depth; stops early if the module closes.
    IrreducibleModule(Weight lam, Convention conv, int depth)
        : lam_(std::move(lam)), conv_(conv), s_(&Structure::get(lam_.context(), conv)), depth_(depth) {
        if (depth < 0) throw std::invalid_argument("irreducible: negative depth");
        build();
    }

    const Weight& highest_weight() const { return lam_; }
    Convention convention() const { return conv_; }
    const Structure& structure() const { return *s_; }
    int rank() const { return s_->rank(); }
    int depth() const { return depth_; }
    /// True when a full layer vanished inside the depth window.
    bool closed() const { return closed_; }
    std::optional<int> closing_height() const { return closing_; }

    const std::vector<WeightSpace>& spaces() const { return spaces_; }
    const WeightSpace& space(int idx) const { return spaces_.at(static_cast<std::size_t>(idx)); }
    /// Index of the space of weight nu, or -1 if nu is not a (nonzero) weight within the window.
    int find(const Weight& nu) const {
        auto it = index_.find(nu);
        return it == index_.end() ? -1 : it->second;
    }
    std::size_t dim(const Weight& nu) const {
        int i = find(nu);
        return i < 0 ? 0 : space(i).dim;
    }
    /// Whether dim(nu) is known exactly (nu inside the window or the module closed).
    bool within_window(const Weight& nu) const {
        if (closed_) return true;
        Rational h = height(s_->roots(), lam_ - nu);
        return h <= Rational(depth_);
    }
    std::size_t total_dim() const {
        if (!closed_) throw std::logic_error("total_dim: module not closed within depth");
        std::size_t t = 0;
        for (const auto& w : spaces_) t += w.dim;
        return t;
    }
    std::map<Weight, std::size_t> character() const {
        std::map<Weight, std::size_t> ch;
        for (const auto& w : spaces_) ch[w.weight] = w.dim;
        return ch;
    }

    const Weight& simple_root(int k) const { return s_->root(s_->simple(k)); }
    bool simple_odd(int k) const { return s_->odd(s_->simple(k)); }
    /// mu(H_k) for the simple coroot H_k = [X_k, Y_k].
    Rational coroot(const Weight& mu, int k) const { return evaluate(mu, H_.at(static_cast<std::size_t>(k))); }

    /// X_k v for v in the space idx; returns the target index (-1 when the result is zero).
    std::pair<int, Vec<Rational>> raise(int k, int idx, const Vec<Rational>& v) const {
        const WeightSpace& w = space(idx);
        int t = w.up[static_cast<std::size_t>(k)];
        if (t < 0) return {-1, {}};
        return {t, w.X[static_cast<std::size_t>(k)].apply(v)};
    }
    /// Y_k v for v in the space idx; throws when the target lies beyond the window.
    std::pair<int, Vec<Rational>> lower(int k, int idx, const Vec<Rational>& v) const {
        Weight target = space(idx).weight - simple_root(k);
        int t = find(target);
        if (t < 0) {
            if (!within_window(target)) throw std::out_of_range("irreducible: lowering beyond depth " + std::to_string(depth_));
            return {-1, {}};
        }
        return {t, space(t).Y[static_cast<std::size_t>(k)].apply(v)};
    }

private:
    void build() {
        const int r = rank();
        for (int k = 0; k < r; ++k) H_.push_back(s_->simple_H(k));
        WeightSpace top;
        top.weight = lam_;
        top.dim = 1;
        top.up.assign(static_cast<std::size_t>(r), -1);
        top.X.assign(static_cast<std::size_t>(r), Matrix<Rational>());
        top.Y.assign(static_cast<std::size_t>(r), Matrix<Rational>());
        add_space(std::move(top));
        std::vector<int> layer{0};
        for (int h = 1; h <= depth_; ++h) {
            std::map<Weight, bool> next;
            for (int idx : layer)
                for (int k = 0; k < r; ++k) next.emplace(space(idx).weight - simple_root(k), true);
            std::vector<int> built;
            for (const auto& [nu, unused] : next) {
                int idx = build_space(nu, h);
                if (idx >= 0) built.push_back(idx);
            }
            if (built.empty()) {
                closed_ = true;
                closing_ = h;
                return;
            }
            layer = std::move(built);
        }
    }

    int add_space(WeightSpace w) {
        int idx = static_cast<int>(spaces_.size());
        index_.emplace(w.weight, idx);
        spaces_.push_back(std::move(w));
        return idx;
    }

    static int sign(bool a, bool b) { return a && b ? -1 : 1; }

    int build_space(const Weight& nu, int h) {
        const int r = rank();
        std::vector<int> up(static_cast<std::size_t>(r), -1);
        std::vector<std::size_t> offset(static_cast<std::size_t>(r) + 1, 0);
        for (int i = 0; i < r; ++i) {
            up[static_cast<std::size_t>(i)] = find(nu + simple_root(i));
            std::size_t di = up[static_cast<std::size_t>(i)] < 0 ? 0 : space(up[static_cast<std::size_t>(i)]).dim;
            offset[static_cast<std::size_t>(i) + 1] = offset[static_cast<std::size_t>(i)] + di;
        }
        const std::size_t amb = offset.back();
        IncrementalBasis<Rational> basis(amb);
        // candidates[k][b] = image vector of Y_k b
        std::vector<std::vector<Vec<Rational>>> cand(static_cast<std::size_t>(r));
        for (int k = 0; k < r; ++k) {
            int src = up[static_cast<std::size_t>(k)];
            if (src < 0) continue;
            const WeightSpace& S = space(src);
            Rational hk = coroot(S.weight, k);
            for (std::size_t b = 0; b < S.dim; ++b) {
                Vec<Rational> img(amb);
                for (int i = 0; i < r; ++i) {
                    int tgt = up[static_cast<std::size_t>(i)];
                    if (tgt < 0) continue;
                    std::size_t off = offset[static_cast<std::size_t>(i)];
                    // X_i Y_k b = (-1)^{|i||k|} Y_k X_i b + delta_ik H_k b
                    int mid = S.up[static_cast<std::size_t>(i)];
                    if (mid >= 0) {
                        Vec<Rational> xb = S.X[static_cast<std::size_t>(i)].col(b);
                        if (!is_zero_vec(xb)) {
                            const Matrix<Rational>& yk = space(tgt).Y[static_cast<std::size_t>(k)];
                            if (space(tgt).up[static_cast<std::size_t>(k)] != mid)
                                throw std::logic_error("irreducible: inconsistent weight graph");
                            Vec<Rational> y = yk.apply(xb);
                            Rational sg(sign(simple_odd(i), simple_odd(k)));
                            for (std::size_t q = 0; q < y.size(); ++q)
                                if (!y[q].is_zero()) img[off + q] += sg * y[q];
                        }
                    }
                    if (i == k && !hk.is_zero()) img[off + b] += hk;
                }
                cand[static_cast<std::size_t>(k)].push_back(std::move(img));
                basis.insert(cand[static_cast<std::size_t>(k)].back());
            }
        }
        if (basis.size() == 0) return -1;
        WeightSpace w;
        w.weight = nu;
        w.height = h;
        w.dim = basis.size();
        w.up = up;
        w.X.resize(static_cast<std::size_t>(r));
        w.Y.resize(static_cast<std::size_t>(r));
        for (int i = 0; i < r; ++i) {
            int tgt = up[static_cast<std::size_t>(i)];
            if (tgt < 0) continue;
            std::size_t di = space(tgt).dim, off = offset[static_cast<std::size_t>(i)];
            Matrix<Rational> X(di, w.dim);
            for (std::size_t c = 0; c < w.dim; ++c)
                for (std::size_t q = 0; q < di; ++q) X.at(q, c) = basis.vectors()[c][off + q];
            w.X[static_cast<std::size_t>(i)] = std::move(X);
        }
        bool parity_set = false;
        for (int k = 0; k < r; ++k) {
            int src = up[static_cast<std::size_t>(k)];
            if (src < 0) continue;
            const auto& cs = cand[static_cast<std::size_t>(k)];
            Matrix<Rational> Y(w.dim, cs.size());
            for (std::size_t b = 0; b < cs.size(); ++b) {
                auto co = basis.coordinates(cs[b]);
                if (!co) throw std::logic_error("irreducible: candidate outside its own span");
                for (std::size_t q = 0; q < w.dim; ++q) Y.at(q, b) = (*co)[q];
            }
            w.Y[static_cast<std::size_t>(k)] = std::move(Y);
            if (!parity_set) {
                w.parity = (space(src).parity + (simple_odd(k) ? 1 : 0)) % 2;
                parity_set = true;
            }
        }
        return add_space(std::move(w));
    }

    Weight lam_;
    Convention conv_;
    const Structure* s_;
    int depth_;
    bool closed_ = false;
    std::optional<int> closing_;
    std::vector<SuperMatrix> H_;
    std::vector<WeightSpace> spaces_;
    std::map<Weight, int> index_;
};

/// Builds a finite-dimensional module, raising the depth until it closes.
inline IrreducibleModule finite_module(const Weight& lam, Convention conv, int max_depth = 64) {
    for (int d = 8;; d *= 2) {
        IrreducibleModule M(lam, conv, std::min(d, max_depth));
        if (M.closed()) return M;
        if (d >= max_depth) throw std::runtime_error("finite_module: " + lam.str() + " did not close by depth " + std::to_string(max_depth));
    }
}

}  // namespace osprep
