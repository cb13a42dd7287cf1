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

#ifndef LATOPS_LATTICE_HPP
#define LATOPS_LATTICE_HPP

#include <stdexcept>
#include <utility>
#include <variant>

#include "poly.hpp"

namespace latops {

/// x(s) = c1 q^{-s} + c2 q^s + c3 with q = Q^2, Q > 0, Q != 1.
struct QQuadratic {
    Rational Q;
    Scalar c1, c2, c3;
};

/// x(s) = 4 beta s^2 + c5 s + c6. beta = 0 is the linear lattice.
struct Quadratic {
    Scalar beta, c5, c6;
};

/// Nonuniform lattice together with its structure constants.
///
/// Both kinds satisfy x(s+1/2) + x(s-1/2) = 2 alpha x(s) + 2 beta, and all
/// derived sequences (alpha_n, beta_n, gamma_n) are given in closed form so
/// they extend to negative n (alpha_{-n} = alpha_n, gamma_{-n} = -gamma_n).
class Lattice {
   public:
    static Lattice q_quadratic(Rational Q, Scalar c1, Scalar c2, Scalar c3) {
        if (sgn(Q) <= 0) throw std::invalid_argument("Q must be positive");
        if (Q == 1) throw std::invalid_argument("Q must differ from 1");
        if (c1.is_zero() && c2.is_zero()) throw std::invalid_argument("c1 and c2 must not both vanish");
        return Lattice(QQuadratic{std::move(Q), std::move(c1), std::move(c2), std::move(c3)});
    }

    static Lattice quadratic(Scalar beta, Scalar c5, Scalar c6) {
        if (beta.is_zero() && c5.is_zero()) throw std::invalid_argument("beta and c5 must not both vanish");
        return Lattice(Quadratic{std::move(beta), std::move(c5), std::move(c6)});
    }

    bool is_q() const noexcept { return std::holds_alternative<QQuadratic>(v_); }
    const QQuadratic& q_params() const { return std::get<QQuadratic>(v_); }
    const Quadratic& quadratic_params() const { return std::get<Quadratic>(v_); }

    /// q^{k/2} = Q^k; only meaningful on q-quadratic lattices.
    Rational q_half_power(long k) const { return rational_pow(q_params().Q, k); }

    Scalar alpha() const { return alpha_n(1); }

    Scalar beta() const {
        if (is_q()) return (Scalar(1) - alpha()) * q_params().c3;
        return quadratic_params().beta;
    }

    Scalar alpha_n(long n) const {
        if (!is_q()) return Scalar(1);
        return Scalar((q_half_power(n) + q_half_power(-n)) / 2);
    }

    Scalar gamma_n(long n) const {
        if (!is_q()) return Scalar(n);
        const Rational& Q = q_params().Q;
        return Scalar((q_half_power(n) - q_half_power(-n)) / (Q - Rational(1) / Q));
    }

    Scalar beta_n(long n) const {
        if (is_q()) return (Scalar(1) - alpha_n(n)) * q_params().c3;
        return quadratic_params().beta * Scalar(n * n);
    }

    /// Center of the lattice variable: c3 for q-lattices (the affine shift in U1, U2).
    const Scalar& c3() const { return q_params().c3; }

    friend bool operator==(const Lattice& a, const Lattice& b) {
        if (a.is_q() != b.is_q()) return false;
        if (a.is_q()) {
            const auto& x = a.q_params();
            const auto& y = b.q_params();
            return x.Q == y.Q && x.c1 == y.c1 && x.c2 == y.c2 && x.c3 == y.c3;
        }
        const auto& x = a.quadratic_params();
        const auto& y = b.quadratic_params();
        return x.beta == y.beta && x.c5 == y.c5 && x.c6 == y.c6;
    }

   private:
    explicit Lattice(std::variant<QQuadratic, Quadratic> v) : v_(std::move(v)) {}

    std::variant<QQuadratic, Quadratic> v_;
};

struct LatticeSeq {
    long n;
    Scalar alpha_n, beta_n, gamma_n;
};

inline LatticeSeq lattice_seq(const Lattice& L, long n) { return {n, L.alpha_n(n), L.beta_n(n), L.gamma_n(n)}; }

struct StructuralPolys {
    Poly U1, U2;
};

/// U1, U2 enter the product rule for S_x and the D_x^n S_x commutation relation;
/// U2(x(s)) = ((x(s+1/2) - x(s-1/2)) / 2)^2.
inline StructuralPolys structural_polys(const Lattice& L) {
    if (L.is_q()) {
        const auto& p = L.q_params();
        Scalar a = L.alpha();
        Scalar k = a * a - Scalar(1);
        Poly shifted{-p.c3, 1};
        return {k * shifted, k * (shifted * shifted - Poly::constant(Scalar(4) * p.c1 * p.c2))};
    }
    const auto& p = L.quadratic_params();
    return {Poly::constant(Scalar(2) * p.beta),
            Poly{Scalar(-4) * p.beta * p.c6 + p.c5 * p.c5 / Scalar(4), Scalar(4) * p.beta}};
}

/// Exact node x(s). q-lattices need 2s integral so that q^s = Q^{2s} stays rational.
inline Scalar x_eval(const Lattice& L, const Rational& s) {
    if (L.is_q()) {
        Rational two_s = 2 * s;
        if (two_s.get_den() != 1) throw std::invalid_argument("q-lattice nodes need a half-integer s");
        long k = two_s.get_num().get_si();
        const auto& p = L.q_params();
        return p.c1 * Scalar(L.q_half_power(-k)) + p.c2 * Scalar(L.q_half_power(k)) + p.c3;
    }
    const auto& p = L.quadratic_params();
    return Scalar(4) * p.beta * Scalar(s * s) + p.c5 * Scalar(s) + p.c6;
}

}  // namespace latops

#endif
