/*
   Copyright 2026 The latops Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef LATOPS_SCALAR_HPP
#define LATOPS_SCALAR_HPP

#include <gmpxx.h>

#include <cctype>
#include <cstdio>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace latops {

/// Arbitrary precision rational, always kept in canonical form
/// (positive denominator, reduced, zero is 0/1).
using Rational = mpq_class;
using BigInt = mpz_class;

namespace detail {

inline bool is_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

inline std::string strip_spaces(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
    return out;
}

}  // namespace detail

/// num/den in canonical form; den != 0.
inline Rational make_rational(long num, long den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/// Parses "p", "p/q", "-p/q" (q > 0 after sign normalization, q != 0).
inline Rational parse_rational(std::string_view text) {
    std::string s = detail::strip_spaces(text);
    std::string_view v = s;
    bool negative = false;
    if (!v.empty() && (v.front() == '+' || v.front() == '-')) {
        negative = v.front() == '-';
        v.remove_prefix(1);
    }
    auto slash = v.find('/');
    std::string_view num = v.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : v.substr(slash + 1);
    if (!detail::is_digits(num) || !detail::is_digits(den))
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    BigInt n(std::string(num), 10);
    BigInt d(std::string(den), 10);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    Rational r(negative ? BigInt(-n) : n, d);
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

/// Exact sqrt of a nonnegative rational when it is a perfect square.
inline std::optional<Rational> rational_sqrt(const Rational& r) {
    if (sgn(r) < 0) return std::nullopt;
    const BigInt& n = r.get_num();
    const BigInt& d = r.get_den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
    BigInt sn, sd;
    mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
    Rational out(sn, sd);
    out.canonicalize();
    return out;
}

/// Q^k for any integer k; Q must be nonzero when k < 0.
inline Rational rational_pow(const Rational& base, long k) {
    if (k == 0) return Rational(1);
    if (k < 0) {
        if (base == 0) throw std::domain_error("zero to a negative power");
        return rational_pow(Rational(1) / base, -k);
    }
    BigInt n, d;
    mpz_pow_ui(n.get_mpz_t(), base.get_num().get_mpz_t(), static_cast<unsigned long>(k));
    mpz_pow_ui(d.get_mpz_t(), base.get_den().get_mpz_t(), static_cast<unsigned long>(k));
    Rational out(n, d);
    out.canonicalize();
    return out;
}

/// Element of Q(i): re + im*i with exact rational parts.
class Scalar {
   public:
    Scalar() = default;
    Scalar(int v) : re_(v) {}
    Scalar(long v) : re_(v) {}
    Scalar(Rational re) : re_(std::move(re)) {}
    Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static Scalar i() { return Scalar(Rational(0), Rational(1)); }

    const Rational& re() const noexcept { return re_; }
    const Rational& im() const noexcept { return im_; }

    bool is_zero() const noexcept { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const noexcept { return sgn(im_) == 0; }

    Scalar conj() const { return Scalar(re_, -im_); }
    /// |z|^2
    Rational norm() const { return re_ * re_ + im_ * im_; }

    Scalar inverse() const {
        if (is_zero()) throw std::domain_error("division by zero scalar");
        if (is_real()) return Scalar(Rational(1) / re_);
        Rational n = norm();
        return Scalar(re_ / n, -im_ / n);
    }

    Scalar operator-() const { return Scalar(-re_, -im_); }

    Scalar& operator+=(const Scalar& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    Scalar& operator-=(const Scalar& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    Scalar& operator*=(const Scalar& o) {
        if (o.is_real()) {
            re_ *= o.re_;
            im_ *= o.re_;
        } else if (is_real()) {
            im_ = re_ * o.im_;
            re_ *= o.re_;
        } else {
            Rational r = re_ * o.re_ - im_ * o.im_;
            Rational m = re_ * o.im_ + im_ * o.re_;
            re_ = std::move(r);
            im_ = std::move(m);
        }
        return *this;
    }
    Scalar& operator/=(const Scalar& o) {
        if (o.is_zero()) throw std::domain_error("division by zero scalar");
        if (o.is_real()) {
            re_ /= o.re_;
            im_ /= o.re_;
            return *this;
        }
        return *this *= o.inverse();
    }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.re_ == b.re_ && a.im_ == b.im_; }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

   private:
    Rational re_{0};
    Rational im_{0};
};

/// z^k for any integer k (z != 0 when k < 0).
inline Scalar pow(const Scalar& z, long k) {
    if (k < 0) return pow(z.inverse(), -k);
    if (z.is_real()) return Scalar(rational_pow(z.re(), k));
    Scalar result(1);
    Scalar b = z;
    auto e = static_cast<unsigned long>(k);
    while (e) {
        if (e & 1u) result *= b;
        e >>= 1u;
        if (e) b *= b;
    }
    return result;
}

/// Principal square root in Q(i) when it exists there (Re > 0, or Re = 0 and Im >= 0).
inline std::optional<Scalar> gaussian_sqrt(const Scalar& w) {
    if (w.is_real()) {
        if (sgn(w.re()) >= 0) {
            auto s = rational_sqrt(w.re());
            if (!s) return std::nullopt;
            return Scalar(*s);
        }
        auto s = rational_sqrt(-w.re());
        if (!s) return std::nullopt;
        return Scalar(Rational(0), *s);
    }
    auto modulus = rational_sqrt(w.norm());
    if (!modulus) return std::nullopt;
    auto u = rational_sqrt((w.re() + *modulus) / 2);
    if (!u) return std::nullopt;
    Rational v = w.im() / (2 * *u);
    return Scalar(*u, v);
}

/// Canonical text: "p/q", "r/s*i", "p/q+r/s*i", "p/q-r/s*i"; integers drop "/1".
inline std::string to_string(const Scalar& z) {
    if (z.is_real()) return to_string(z.re());
    std::string im = to_string(abs(z.im())) + "*i";
    if (sgn(z.re()) == 0) return sgn(z.im()) < 0 ? "-" + im : im;
    return to_string(z.re()) + (sgn(z.im()) < 0 ? "-" : "+") + im;
}

inline std::ostream& operator<<(std::ostream& os, const Scalar& z) { return os << to_string(z); }

/// Inverse of to_string; also accepts "i", "-i", "2*i", "1/2+i" and integer shorthand.
inline Scalar parse_scalar(std::string_view text) {
    std::string s = detail::strip_spaces(text);
    if (s.empty()) throw std::invalid_argument("empty scalar");
    if (s.back() != 'i') return Scalar(parse_rational(s));

    // Split at the last sign that is not the leading character.
    std::size_t split = std::string::npos;
    for (std::size_t k = s.size(); k-- > 1;) {
        if (s[k] == '+' || s[k] == '-') {
            split = k;
            break;
        }
    }
    std::string re_part = split == std::string::npos ? "" : s.substr(0, split);
    std::string im_part = split == std::string::npos ? s : s.substr(split);
    im_part.pop_back();  // 'i'
    if (!im_part.empty() && im_part.back() == '*') {
        im_part.pop_back();
        if (im_part.empty() || im_part == "+" || im_part == "-")
            throw std::invalid_argument("malformed scalar '" + std::string(text) + "'");
    } else if (!(im_part.empty() || im_part == "+" || im_part == "-")) {
        throw std::invalid_argument("malformed scalar '" + std::string(text) + "'");
    }
    if (im_part.empty() || im_part == "+") im_part = "1";
    if (im_part == "-") im_part = "-1";
    Rational im = parse_rational(im_part);
    Rational re = re_part.empty() ? Rational(0) : parse_rational(re_part);
    return Scalar(re, im);
}

/// Decimal rendering for human-readable output only.
inline std::string to_approx_string(const Scalar& z) {
    char buf[64];
    if (z.is_real()) {
        std::snprintf(buf, sizeof buf, "%.12g", z.re().get_d());
    } else {
        std::snprintf(buf, sizeof buf, "%.12g%+.12gi", z.re().get_d(), z.im().get_d());
    }
    return buf;
}

}  // namespace latops

#endif
