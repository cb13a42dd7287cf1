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

#ifndef LATOPS_POLY_HPP
#define LATOPS_POLY_HPP

#include <algorithm>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "scalar.hpp"

namespace latops {

/// Dense univariate polynomial over Q(i), ascending coefficients.
/// Never stores trailing zeros; the zero polynomial has no coefficients.
class Poly {
   public:
    Poly() = default;
    explicit Poly(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }
    Poly(std::initializer_list<Scalar> coeffs) : c_(coeffs) { trim(); }

    static Poly constant(const Scalar& c) { return Poly(std::vector<Scalar>{c}); }
    /// c * z^n
    static Poly monomial(std::size_t n, const Scalar& c = Scalar(1)) {
        std::vector<Scalar> v(n + 1);
        v[n] = c;
        return Poly(std::move(v));
    }
    static Poly z() { return monomial(1); }

    bool is_zero() const noexcept { return c_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
    std::size_t size() const noexcept { return c_.size(); }
    std::span<const Scalar> coeffs() const noexcept { return c_; }

    /// Coefficient of z^k (zero past the degree).
    Scalar operator[](std::size_t k) const { return k < c_.size() ? c_[k] : Scalar(); }

    const Scalar& leading() const {
        if (c_.empty()) throw std::domain_error("zero polynomial has no leading coefficient");
        return c_.back();
    }

    bool is_monic() const { return !c_.empty() && c_.back() == Scalar(1); }

    Scalar operator()(const Scalar& x) const {
        Scalar acc;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            acc *= x;
            acc += *it;
        }
        return acc;
    }

    Poly operator-() const {
        Poly out = *this;
        for (auto& c : out.c_) c = -c;
        return out;
    }

    Poly& operator+=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
        trim();
        return *this;
    }
    Poly& operator*=(const Scalar& s) {
        if (s.is_zero()) {
            c_.clear();
            return *this;
        }
        for (auto& c : c_) c *= s;
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Scalar& s) { return a *= s; }
    friend Poly operator*(const Scalar& s, Poly a) { return a *= s; }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Scalar> out(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
        }
        return Poly(std::move(out));
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    /// First derivative in z.
    Poly derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<Scalar> out(c_.size() - 1);
        for (std::size_t k = 1; k < c_.size(); ++k) out[k - 1] = c_[k] * Scalar(static_cast<long>(k));
        return Poly(std::move(out));
    }

   private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<Scalar> c_;
};

/// Returns q with q(z) = p(lambda*z + mu).
inline Poly affine_map(const Poly& p, const Scalar& lambda, const Scalar& mu) {
    if (lambda.is_zero()) throw std::invalid_argument("affine map needs a nonzero scale");
    const Poly inner{mu, lambda};
    Poly acc;
    for (long k = p.degree(); k >= 0; --k) {
        acc = acc * inner;
        acc += Poly::constant(p[static_cast<std::size_t>(k)]);
    }
    return acc;
}

/// "c0,c1,..." with canonical scalar strings; "0" for the zero polynomial.
inline std::string to_string(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (std::size_t k = 0; k < p.size(); ++k) {
        if (k) out += ',';
        out += to_string(p[k]);
    }
    return out;
}

/// Inverse of to_string(Poly): comma separated ascending coefficients.
inline Poly parse_poly(std::string_view text) {
    std::vector<Scalar> coeffs;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto comma = text.find(',', start);
        auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        coeffs.push_back(parse_scalar(piece));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return Poly(std::move(coeffs));
}

inline std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << '[' << to_string(p) << ']'; }

}  // namespace latops

#endif
