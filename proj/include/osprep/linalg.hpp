#pragma once

// Dense exact linear algebra over Rational or FieldScalar.

#include "osprep/field.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

namespace osprep {

template <class S>
using Vec = std::vector<S>;

template <class S>
bool is_zero_vec(const Vec<S>& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

/// v += c * w, skipping zero entries of w.
template <class S>
void axpy(Vec<S>& v, const S& c, const Vec<S>& w) {
    if (c.is_zero()) return;
    for (std::size_t i = 0; i < w.size(); ++i)
        if (!w[i].is_zero()) v[i] += c * w[i];
}

template <class S>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    S& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const S& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Vec<S> row(std::size_t r) const {
        return Vec<S>(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                      data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
    }
    Vec<S> col(std::size_t c) const {
        Vec<S> v(rows_);
        for (std::size_t r = 0; r < rows_; ++r) v[r] = at(r, c);
        return v;
    }

    Vec<S> apply(const Vec<S>& x) const {
        if (x.size() != cols_) throw std::invalid_argument("Matrix::apply: dimension mismatch");
        Vec<S> y(rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                if (!at(r, c).is_zero() && !x[c].is_zero()) y[r] += at(r, c) * x[c];
        return y;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<S> data_;
};

/// Reduced row echelon form in place; returns the pivot columns.
template <class S>
std::vector<std::size_t> rref(Matrix<S>& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m.at(p, c).is_zero()) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(r, j));
        S inv = m.at(r, c).inverse();
        for (std::size_t j = c; j < m.cols(); ++j)
            if (!m.at(r, j).is_zero()) m.at(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, c).is_zero()) continue;
            S f = m.at(i, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                if (!m.at(r, j).is_zero()) m.at(i, j) -= f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

template <class S>
std::size_t rank(Matrix<S> m) {
    return rref(m).size();
}

/// Basis of {x : m x = 0}.
template <class S>
std::vector<Vec<S>> kernel(Matrix<S> m) {
    auto pivots = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<Vec<S>> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vec<S> x(m.cols());
        x[f] = S(1);
        for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = -m.at(i, f);
        basis.push_back(std::move(x));
    }
    return basis;
}

/// Incrementally grown subspace that remembers how its echelon rows are
/// built from the accepted input vectors, so coordinates with respect to
/// those inputs can be recovered.
template <class S>
class IncrementalBasis {
public:
    explicit IncrementalBasis(std::size_t ambient = 0) : n_(ambient) {}

    std::size_t ambient() const { return n_; }
    std::size_t size() const { return accepted_.size(); }
    const std::vector<Vec<S>>& vectors() const { return accepted_; }

    /// Adds v if independent; returns its index among accepted vectors.
    std::optional<std::size_t> insert(const Vec<S>& v) {
        check(v);
        Vec<S> res = v;
        Vec<S> combo(accepted_.size() + 1);
        reduce(res, combo);
        std::size_t p = 0;
        while (p < n_ && res[p].is_zero()) ++p;
        if (p == n_) return std::nullopt;
        std::size_t k = accepted_.size();
        accepted_.push_back(v);
        for (auto& c : combos_) c.emplace_back();
        // res = v - sum combo_i rows_i  =>  row = (e_k - combo)/pivot
        Vec<S> newc(k + 1);
        for (std::size_t i = 0; i < k; ++i) newc[i] = -combo[i];
        newc[k] = S(1);
        S inv = res[p].inverse();
        for (auto& x : res)
            if (!x.is_zero()) x *= inv;
        for (auto& x : newc)
            if (!x.is_zero()) x *= inv;
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (rows_[i][p].is_zero()) continue;
            S f = -rows_[i][p];
            axpy(rows_[i], f, res);
            axpy(combos_[i], f, newc);
        }
        rows_.push_back(std::move(res));
        combos_.push_back(std::move(newc));
        pivots_.push_back(p);
        return k;
    }

    bool contains(const Vec<S>& v) const {
        check(v);
        Vec<S> res = v;
        Vec<S> combo(accepted_.size());
        reduce(res, combo);
        return is_zero_vec(res);
    }

    /// Coefficients c with v = sum c_i accepted_i, or nullopt if v is outside.
    std::optional<Vec<S>> coordinates(const Vec<S>& v) const {
        check(v);
        Vec<S> res = v;
        Vec<S> combo(accepted_.size());
        reduce(res, combo);
        if (!is_zero_vec(res)) return std::nullopt;
        return combo;
    }

private:
    void check(const Vec<S>& v) const {
        if (v.size() != n_) throw std::invalid_argument("IncrementalBasis: dimension mismatch");
    }
    void reduce(Vec<S>& res, Vec<S>& combo) const {
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const S& c = res[pivots_[i]];
            if (c.is_zero()) continue;
            S f = c;
            for (std::size_t j = 0; j < combos_[i].size(); ++j)
                if (!combos_[i][j].is_zero()) combo[j] += f * combos_[i][j];
            axpy(res, -f, rows_[i]);
        }
    }

    std::size_t n_;
    std::vector<Vec<S>> accepted_;
    std::vector<Vec<S>> rows_;
    std::vector<Vec<S>> combos_;
    std::vector<std::size_t> pivots_;
};

/// Rank of a family of vectors of equal length.
template <class S>
std::size_t span_rank(const std::vector<Vec<S>>& vs, std::size_t ambient) {
    IncrementalBasis<S> b(ambient);
    for (const auto& v : vs) b.insert(v);
    return b.size();
}

template <class S>
Vec<FieldScalar> to_field(const Vec<S>& v) {
    Vec<FieldScalar> out;
    out.reserve(v.size());
    for (const auto& x : v) out.emplace_back(x);
    return out;
}

}  // namespace osprep
