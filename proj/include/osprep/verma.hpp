#pragma once

// Verma modules U(n-) v+ in PBW form over the structure table, the
// anti-involution tau and the contravariant form.

#include "osprep/structure.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace osprep {

/// Indices of negative root vectors Y_a, non-decreasing, odd a at most once.
using PBWWord = std::vector<int>;
using VermaVector = std::map<PBWWord, Rational>;

inline void add_term(VermaVector& v, const PBWWord& w, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = v.emplace(w, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) v.erase(it);
    }
}

inline void add_scaled(VermaVector& v, const VermaVector& u, const Rational& c) {
    if (c.is_zero()) return;
    for (const auto& [w, x] : u) add_term(v, w, c * x);
}

inline Rational coefficient(const VermaVector& v, const PBWWord& w) {
    auto it = v.find(w);
    return it == v.end() ? Rational(0) : it->second;
}

class VermaModule {
public:
    /// depth bounds the height of words produced by lowering; nullopt means unbounded.
    explicit VermaModule(Weight lam, Convention conv = Convention::nonstandard, std::optional<int> depth = std::nullopt)
        : lam_(std::move(lam)), s_(&Structure::get(lam_.context(), conv)), depth_(depth) {}

    const Weight& highest_weight() const { return lam_; }
    const Structure& structure() const { return *s_; }
    std::optional<int> depth() const { return depth_; }

    Weight word_weight(const PBWWord& w) const {
        Weight x = lam_;
        for (int a : w) x -= s_->root(a);
        return x;
    }
    long word_height(const PBWWord& w) const {
        Rational h;
        for (int a : w) h += s_->root_height(a);
        return h.to_long();
    }
    int word_parity(const PBWWord& w) const {
        int p = 0;
        for (int a : w) p ^= s_->odd(a) ? 1 : 0;
        return p;
    }
    bool is_pbw(const PBWWord& w) const {
        for (std::size_t i = 0; i + 1 < w.size(); ++i) {
            if (w[i] > w[i + 1]) return false;
            if (w[i] == w[i + 1] && s_->odd(w[i])) return false;
        }
        return true;
    }

    /// Action of structure-table basis element i, straightened to PBW form.
    VermaVector apply(int i, const VermaVector& v) const {
        VermaVector out;
        for (const auto& [w, c] : v) add_scaled(out, apply_word(i, w), c);
        return out;
    }
    VermaVector apply(const LieElem& e, const VermaVector& v) const {
        VermaVector out;
        for (const auto& t : e) add_scaled(out, apply(t.index, v), t.coef);
        return out;
    }
    VermaVector act_raise(int a, const VermaVector& v) const { return apply(s_->x_index(a), v); }
    VermaVector act_lower(int a, const VermaVector& v) const { return apply(s_->y_index(a), v); }

    static VermaVector top() { return VermaVector{{PBWWord{}, Rational(1)}}; }

    /// All PBW words of height <= depth, grouped by weight.
    std::map<Weight, std::vector<PBWWord>> basis(int depth) const {
        if (depth < 0) throw std::invalid_argument("verma basis: negative depth");
        std::map<Weight, std::vector<PBWWord>> out;
        PBWWord cur;
        auto rec = [&](auto&& self, int a, long budget) -> void {
            if (a == s_->positive_count()) {
                out[word_weight(cur)].push_back(cur);
                return;
            }
            long h = s_->root_height(a).to_long();
            int cap = s_->odd(a) ? 1 : static_cast<int>(budget / h);
            for (int e = 0; e <= cap && e * h <= budget; ++e) {
                self(self, a + 1, budget - e * h);
                cur.push_back(a);
            }
            for (int e = 0; e <= cap && e * h <= budget; ++e) cur.pop_back();
        };
        rec(rec, 0, depth);
        for (auto& [wt, ws] : out) std::sort(ws.begin(), ws.end());
        return out;
    }

    /// PBW words of weight nu.
    std::vector<PBWWord> words_at(const Weight& nu) const {
        Weight gap = lam_ - nu;
        Rational h = height(s_->roots(), gap);
        if (!h.is_integer() || h.sign() < 0) return {};
        auto b = basis(static_cast<int>(h.to_long()));
        auto it = b.find(nu);
        return it == b.end() ? std::vector<PBWWord>{} : it->second;
    }

private:
    const VermaVector& apply_word(int i, const PBWWord& w) const {
        auto key = std::make_pair(i, w);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        VermaVector r = compute(i, w);
        return memo_.emplace(std::move(key), std::move(r)).first->second;
    }

    VermaVector compute(int i, const PBWWord& w) const {
        const Structure& s = *s_;
        VermaVector out;
        if (s.is_h(i)) {
            LieElem h{{i, Rational(1)}};
            add_term(out, w, s.evaluate_cartan(word_weight(w), h));
            return out;
        }
        if (w.empty()) {
            if (s.is_y(i)) {
                PBWWord one{s.root_of(i)};
                check_depth(one);
                add_term(out, one, Rational(1));
            }
            return out;
        }
        int first = w.front();
        PBWWord rest(w.begin() + 1, w.end());
        VermaVector restv{{rest, Rational(1)}};
        if (s.is_y(i)) {
            int a = s.root_of(i);
            if (a < first || (a == first && !s.odd(a))) {
                PBWWord nw;
                nw.reserve(w.size() + 1);
                nw.push_back(a);
                nw.insert(nw.end(), w.begin(), w.end());
                check_depth(nw);
                add_term(out, nw, Rational(1));
                return out;
            }
            if (a == first) {
                // Y_a^2 = 1/2 [Y_a, Y_a] for odd a
                add_scaled(out, apply(s.bracket(i, i), restv), Rational(1, 2));
                return out;
            }
        }
        // b Y_f rest = (-1)^{|b||f|} Y_f (b rest) + [b, Y_f] rest
        int yf = s.y_index(first);
        int sign = s.basis_parity(i) * s.basis_parity(yf) == 1 ? -1 : 1;
        add_scaled(out, apply(yf, apply(i, restv)), Rational(sign));
        add_scaled(out, apply(s.bracket(i, yf), restv), Rational(1));
        return out;
    }

    void check_depth(const PBWWord& w) const {
        if (depth_ && word_height(w) > *depth_)
            throw std::out_of_range("verma: lowering beyond truncation depth " + std::to_string(*depth_));
    }

    Weight lam_;
    const Structure* s_;
    std::optional<int> depth_;
    mutable std::map<std::pair<int, PBWWord>, VermaVector> memo_;
};

/// tau(Y_{b1} ... Y_{bk}) = sign * X_{bk} ... X_{b1}; roots lists the X factors left to right.
struct RaisingWord {
    int sign = 1;
    std::vector<int> roots;
};

inline RaisingWord tau(const Structure& s, const PBWWord& w) {
    RaisingWord r;
    int odd_after = 0;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        if (s.odd(*it) && odd_after % 2) r.sign = -r.sign;
        if (s.odd(*it)) ++odd_after;
        r.roots.push_back(*it);
    }
    // roots now holds b_k, ..., b_1
    return r;
}

/// Applies tau(f) to v.
inline VermaVector apply_tau(const VermaModule& M, const PBWWord& f, const VermaVector& v) {
    RaisingWord r = tau(M.structure(), f);
    VermaVector cur = v;
    for (auto it = r.roots.rbegin(); it != r.roots.rend(); ++it) cur = M.act_raise(*it, cur);
    VermaVector out;
    add_scaled(out, cur, Rational(r.sign));
    return out;
}

/// (u, w) = sum conj(u_f) w_g (v+, tau(f) g v+).
inline Rational contravariant_form(const VermaModule& M, const VermaVector& u, const VermaVector& w) {
    Rational s;
    for (const auto& [f, c] : u) s += c * coefficient(apply_tau(M, f, w), PBWWord{});
    return s;
}

/// Gram matrix of the contravariant form on the weight space nu, rows and columns in words_at order.
inline Matrix<Rational> gram(const VermaModule& M, const Weight& nu) {
    auto ws = M.words_at(nu);
    Matrix<Rational> g(ws.size(), ws.size());
    for (std::size_t c = 0; c < ws.size(); ++c) {
        VermaVector col{{ws[c], Rational(1)}};
        for (std::size_t r = 0; r < ws.size(); ++r)
            g.at(r, c) = coefficient(apply_tau(M, ws[r], col), PBWWord{});
    }
    return g;
}

}  // namespace osprep
