#pragma once

// Scalars of Q(z) with z^2 = -1/2. The generator z stands for i/sqrt(2),
// which is the only irrational coefficient the spinor realizations need.

#include "osprep/rational.hpp"

#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace osprep {

class FieldScalar {
public:
    FieldScalar() = default;
    FieldScalar(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
    FieldScalar(long v) : re_(v) {}                    // NOLINT(google-explicit-constructor)
    FieldScalar(int v) : re_(v) {}                     // NOLINT(google-explicit-constructor)
    FieldScalar(Rational re, Rational zc) : re_(std::move(re)), zc_(std::move(zc)) {}

    /// The generator z = i/sqrt(2).
    static FieldScalar zeta() { return {Rational(0), Rational(1)}; }

    const Rational& re() const { return re_; }
    const Rational& zc() const { return zc_; }

    bool is_zero() const { return re_.is_zero() && zc_.is_zero(); }
    bool is_rational() const { return zc_.is_zero(); }

    FieldScalar conj() const { return {re_, -zc_}; }
    /// a^2 + b^2/2, the product s * conj(s).
    Rational norm() const { return re_ * re_ + zc_ * zc_ / Rational(2); }

    FieldScalar operator-() const { return {-re_, -zc_}; }
    FieldScalar& operator+=(const FieldScalar& o) { re_ += o.re_; zc_ += o.zc_; return *this; }
    FieldScalar& operator-=(const FieldScalar& o) { re_ -= o.re_; zc_ -= o.zc_; return *this; }
    FieldScalar& operator*=(const FieldScalar& o) {
        if (zc_.is_zero() && o.zc_.is_zero()) {
            re_ *= o.re_;
            return *this;
        }
        // (a + bz)(c + dz) = ac - bd/2 + (ad + bc)z
        Rational re = re_ * o.re_ - zc_ * o.zc_ / Rational(2);
        Rational zc = re_ * o.zc_ + zc_ * o.re_;
        re_ = std::move(re);
        zc_ = std::move(zc);
        return *this;
    }
    FieldScalar& operator/=(const FieldScalar& o) {
        if (o.is_zero()) throw std::domain_error("FieldScalar: division by zero");
        if (o.zc_.is_zero()) {
            re_ /= o.re_;
            zc_ /= o.re_;
            return *this;
        }
        Rational n = o.norm();
        *this *= o.conj();
        re_ /= n;
        zc_ /= n;
        return *this;
    }

    friend FieldScalar operator+(FieldScalar a, const FieldScalar& b) { return a += b; }
    friend FieldScalar operator-(FieldScalar a, const FieldScalar& b) { return a -= b; }
    friend FieldScalar operator*(FieldScalar a, const FieldScalar& b) { return a *= b; }
    friend FieldScalar operator/(FieldScalar a, const FieldScalar& b) { return a /= b; }
    friend bool operator==(const FieldScalar& a, const FieldScalar& b) {
        return a.re_ == b.re_ && a.zc_ == b.zc_;
    }

    FieldScalar inverse() const { return FieldScalar(1) / *this; }

    /// "p/q + r/s*z"; the z-part is omitted when zero.
    std::string str() const {
        if (zc_.is_zero()) return re_.str();
        return re_.str() + " + " + zc_.str() + "*z";
    }

    /// Accepts the output of str() and the bare forms "p/q" and "r/s*z".
    static FieldScalar parse(std::string_view text) {
        std::string s;
        for (char c : text)
            if (c != ' ') s.push_back(c);
        if (s.empty()) throw std::invalid_argument("FieldScalar: empty string");
        if (s.size() < 2 || s.substr(s.size() - 2) != "*z") return {Rational::parse(s), Rational(0)};
        std::string body = s.substr(0, s.size() - 2);
        // split at the last '+' or '-' that is not a leading sign
        std::size_t cut = std::string::npos;
        for (std::size_t i = body.size(); i-- > 1;) {
            if (body[i] == '+' || body[i] == '-') {
                cut = i;
                break;
            }
        }
        if (cut == std::string::npos) return {Rational(0), Rational::parse(body)};
        std::size_t re_end = cut;
        if (body[cut] == '-' && body[cut - 1] == '+') re_end = cut - 1;
        std::string zs = body[cut] == '+' ? body.substr(cut + 1) : body.substr(cut);
        return {Rational::parse(body.substr(0, re_end)), Rational::parse(zs)};
    }

    friend std::ostream& operator<<(std::ostream& os, const FieldScalar& s) { return os << s.str(); }

private:
    Rational re_;
    Rational zc_;
};

/// Scalar-type traits shared by the templated linear algebra.
template <class S>
inline S conj_of(const S& s) {
    return s;
}
template <>
inline FieldScalar conj_of<FieldScalar>(const FieldScalar& s) {
    return s.conj();
}

}  // namespace osprep
