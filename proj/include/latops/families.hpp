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

#ifndef LATOPS_FAMILIES_HPP
#define LATOPS_FAMILIES_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "functionals.hpp"

namespace latops {

/// B_n together with C_{n+1}.
struct CoeffPair {
    Scalar B;
    Scalar C;
};

// ---------------------------------------------------------------------------
// Askey-Wilson

struct AWParams {
    Scalar a1, a2, a3, a4;
    Rational Q;  // q = Q^2
};

/// Monic Askey-Wilson recurrence coefficients (B_n, C_{n+1}).
/// Throws regularity_error naming the first vanishing restriction factor or denominator.
inline CoeffPair aw_coeffs(const AWParams& p, long n) {
    if (p.a1.is_zero()) throw std::invalid_argument("a1 must be nonzero");
    if (sgn(p.Q) <= 0 || p.Q == 1) throw std::invalid_argument("Q must be positive and differ from 1");
    auto q = [&](long k) { return Scalar(rational_pow(p.Q, 2 * k)); };
    const Scalar one(1);
    const Scalar abcd = p.a1 * p.a2 * p.a3 * p.a4;

    auto require = [&](const Scalar& v, const std::string& name, long idx) {
        if (v.is_zero()) throw regularity_error("Askey-Wilson factor " + name + " vanishes", idx);
    };
    for (long k = 0; k <= n; ++k) {
        require(one - abcd * q(k), "1-a1a2a3a4 q^" + std::to_string(k), k);
        require(one - p.a1 * p.a2 * q(k), "1-a1a2 q^" + std::to_string(k), k);
        require(one - p.a1 * p.a3 * q(k), "1-a1a3 q^" + std::to_string(k), k);
        require(one - p.a1 * p.a4 * q(k), "1-a1a4 q^" + std::to_string(k), k);
        require(one - p.a2 * p.a3 * q(k), "1-a2a3 q^" + std::to_string(k), k);
        require(one - p.a2 * p.a4 * q(k), "1-a2a4 q^" + std::to_string(k), k);
        require(one - p.a3 * p.a4 * q(k), "1-a3a4 q^" + std::to_string(k), k);
    }
    const Scalar den_m2 = one - abcd * q(2 * n - 2);
    const Scalar den_m1 = one - abcd * q(2 * n - 1);
    const Scalar den_0 = one - abcd * q(2 * n);
    const Scalar den_p1 = one - abcd * q(2 * n + 1);
    require(den_m1, "1-a1a2a3a4 q^(2n-1)", n);
    require(den_0, "1-a1a2a3a4 q^(2n)", n);
    require(den_p1, "1-a1a2a3a4 q^(2n+1)", n);

    Scalar B = p.a1 + p.a1.inverse() -
               (one - p.a1 * p.a2 * q(n)) * (one - p.a1 * p.a3 * q(n)) * (one - p.a1 * p.a4 * q(n)) *
                   (one - abcd * q(n - 1)) / (p.a1 * den_m1 * den_0);
    // The second term carries (1 - q^n) and vanishes at n = 0 regardless of den_m2.
    if (n != 0) {
        require(den_m2, "1-a1a2a3a4 q^(2n-2)", n);
        B -= p.a1 * (one - q(n)) * (one - p.a2 * p.a3 * q(n - 1)) * (one - p.a2 * p.a4 * q(n - 1)) *
             (one - p.a3 * p.a4 * q(n - 1)) / (den_m1 * den_m2);
    }
    Scalar C = (one - q(n + 1)) * (one - abcd * q(n - 1)) * (one - p.a1 * p.a2 * q(n)) *
               (one - p.a1 * p.a3 * q(n)) * (one - p.a1 * p.a4 * q(n)) * (one - p.a2 * p.a3 * q(n)) *
               (one - p.a2 * p.a4 * q(n)) * (one - p.a3 * p.a4 * q(n)) /
               (Scalar(4) * den_m1 * den_0 * den_0 * den_p1);
    return {B, C};
}

// ---------------------------------------------------------------------------
// Meixner polynomials of the second kind

/// Meixner-II parameters; b1^2 != -1 and b2 not in {0, -1, -2, ...}.
struct MeixnerParams {
    Scalar b1, b2;

    MeixnerParams(Scalar b1_, Scalar b2_) : b1(std::move(b1_)), b2(std::move(b2_)) {
        if (b1 * b1 == Scalar(-1)) throw std::invalid_argument("b1^2 must differ from -1");
        if (b2.is_real() && b2.re().get_den() == 1 && sgn(b2.re()) <= 0)
            throw std::invalid_argument("b2 must not be a nonpositive integer");
    }
};

inline CoeffPair meixner2_coeffs(const MeixnerParams& p, long n) {
    const Scalar nn(n);
    return {-p.b1 * (Scalar(2) * nn + p.b2), (p.b1 * p.b1 + Scalar(1)) * (nn + Scalar(1)) * (nn + p.b2)};
}

// ---------------------------------------------------------------------------
// Recurrence coefficients of an x-classical functional from its Pearson data

namespace detail {

/// d_k, e_k and phi^{[n]} of the closed-form recurrence for x-classical functionals.
class ClassicalTerms {
   public:
    ClassicalTerms(const PearsonData& pd, const Lattice& L) : pd_(pd), L_(L) {}

    Scalar d(long k) const {
        if (L_.is_q()) return pd_.a() * L_.gamma_n(k) + pd_.d() * L_.alpha_n(k);
        return pd_.a() * Scalar(k) + pd_.d();
    }

    Scalar e(long k) const {
        if (L_.is_q()) {
            const Scalar& c3 = L_.c3();
            return pd_.phi.derivative()(c3) * L_.gamma_n(k) + pd_.psi(c3) * L_.alpha_n(k);
        }
        const Scalar kk(k);
        return pd_.b() * kk + pd_.e() + Scalar(2) * L_.beta() * pd_.d() * kk * kk;
    }

    /// phi^{[n]} evaluated at the point where it decides regularity of C_{n+1}.
    /// Requires d_{2n} != 0.
    Scalar phi_n_at_node(long n) const {
        const Scalar d2n = d(2 * n);
        if (L_.is_q()) {
            const auto& p = L_.q_params();
            const Scalar& c3 = p.c3;
            const Scalar alpha = L_.alpha();
            const Scalar k = alpha * alpha - Scalar(1);
            const Scalar w = -e(n) / d2n;  // z - c3
            const Scalar dphi = pd_.phi.derivative()(c3);
            return (pd_.d() * k * L_.gamma_n(2 * n) + pd_.a() * L_.alpha_n(2 * n)) *
                       (w * w - Scalar(2) * p.c1 * p.c2) +
                   (dphi * L_.alpha_n(n) + pd_.psi(c3) * k * L_.gamma_n(n)) * w + pd_.phi(c3) +
                   Scalar(2) * pd_.a() * p.c1 * p.c2;
        }
        const auto& p = L_.quadratic_params();
        const Scalar nn(n);
        const Scalar bn2 = p.beta * nn * nn;
        const Scalar zz = -bn2 - e(n) / d2n;
        return pd_.a() * zz * zz + (pd_.b() + Scalar(6) * p.beta * nn * d(n)) * zz + pd_.phi(bn2) +
               Scalar(2) * p.beta * nn * pd_.psi(bn2) -
               nn / Scalar(4) * (Scalar(16) * p.beta * p.c6 - p.c5 * p.c5) * d(n);
    }

    Scalar gamma(long k) const { return L_.gamma_n(k); }

   private:
    const PearsonData& pd_;
    const Lattice& L_;
};

}  // namespace detail

/// (B_n, C_{n+1}) of the monic OPS of a functional with D_x(phi u) = S_x(psi u),
/// in closed form from phi, psi and the lattice.
inline CoeffPair classical_coeffs(const PearsonData& pd, const Lattice& L, long n) {
    if (n < 0) throw std::invalid_argument("index must be nonnegative");
    if (pd.d().is_zero()) throw std::invalid_argument("psi must have nonzero leading coefficient");
    detail::ClassicalTerms t(pd, L);
    auto nonzero_d = [&](long k) {
        Scalar v = t.d(k);
        if (v.is_zero()) throw regularity_error("d_" + std::to_string(k) + " vanishes", k);
        return v;
    };
    const Scalar d2n = nonzero_d(2 * n);
    const Scalar d2n_p1 = nonzero_d(2 * n + 1);
    // d_{n-1}/d_{2n-1} is the same index (and equals 1) at n = 0.
    Scalar ratio(1);
    if (n > 0) ratio = nonzero_d(n - 1) / nonzero_d(2 * n - 1);

    const Scalar g_n = t.gamma(n);
    const Scalar g_n1 = t.gamma(n + 1);
    Scalar B;
    if (L.is_q()) {
        B = L.c3() - g_n1 * t.e(n) / d2n;
        if (n > 0) B += g_n * t.e(n - 1) / nonzero_d(2 * n - 2);
    } else {
        const Scalar nn(n);
        B = -(nn + Scalar(1)) * t.e(n) / d2n - Scalar(2) * L.beta() * nn * (nn - Scalar(1));
        if (n > 0) B += nn * t.e(n - 1) / nonzero_d(2 * n - 2);
    }
    Scalar C = -g_n1 * ratio / d2n_p1 * t.phi_n_at_node(n);
    return {B, C};
}

/// Coefficient lists B_0..B_{N}, C_1..C_{N+1} from classical_coeffs.
inline RecurrencePair classical_recurrence(const PearsonData& pd, const Lattice& L, long N) {
    RecurrencePair rec;
    for (long n = 0; n <= N; ++n) {
        auto c = classical_coeffs(pd, L, n);
        rec.B.push_back(c.B);
        rec.C.push_back(c.C);
    }
    return rec;
}

struct Violation {
    long n;
    std::string kind;  // "d" (d_n = 0) or "phi" (phi^{[n]} vanishes at its node, C_{n+1} = 0)
    friend bool operator==(const Violation&, const Violation&) = default;
};

/// Every regularity failure through depth N: d_k = 0 for k <= 2N+1 and
/// phi^{[n]}(node) = 0 for n <= N. Never throws on irregular data.
inline std::vector<Violation> regularity_scan(const PearsonData& pd, const Lattice& L, long N) {
    std::vector<Violation> out;
    detail::ClassicalTerms t(pd, L);
    for (long k = 0; k <= 2 * N + 1; ++k)
        if (t.d(k).is_zero()) out.push_back({k, "d"});
    for (long n = 0; n <= N; ++n) {
        if (t.d(2 * n).is_zero()) continue;
        if (t.phi_n_at_node(n).is_zero()) out.push_back({n, "phi"});
    }
    std::sort(out.begin(), out.end(), [](const Violation& a, const Violation& b) {
        return a.n != b.n ? a.n < b.n : a.kind < b.kind;
    });
    return out;
}

// ---------------------------------------------------------------------------
// Solution family on q-quadratic lattices

/// Seeded by a with r = a^2, so no square roots are needed.
struct Thm1Params {
    Lattice L;
    Scalar a;
};

struct FamilyTerm {
    Scalar B;  // B_n
    Scalar C;  // C_{n+1}
};

namespace detail {

inline void check_thm1_lattice(const Thm1Params& p) {
    if (!p.L.is_q()) throw std::invalid_argument("family needs a q-quadratic lattice");
    const auto& lp = p.L.q_params();
    if ((lp.c1 * lp.c2).is_zero()) throw std::invalid_argument("family needs c1 c2 != 0");
    if (p.a.is_zero()) throw std::invalid_argument("seed a must be nonzero");
}

}  // namespace detail

/// C_1 = (1/2)(1 - q^{-1})(1 + r^{-1})(1 - r q) c1 c2.
inline Scalar thm1_c1(const Thm1Params& p) {
    detail::check_thm1_lattice(p);
    const auto& lp = p.L.q_params();
    const Scalar r = p.a * p.a;
    const Scalar q(p.L.q_half_power(2));
    const Scalar one(1);
    return (one - q.inverse()) * (one + r.inverse()) * (one - r * q) * lp.c1 * lp.c2 / Scalar(2);
}

/// Pearson data of the family: psi = z - c3, phi = -(alpha - 1/alpha)(z - c3)^2 - C_1/alpha.
inline PearsonData thm1_pearson(const Thm1Params& p) {
    const Scalar alpha = p.L.alpha();
    const Poly w{-p.L.c3(), 1};
    Poly phi = -(alpha - alpha.inverse()) * (w * w) - Poly::constant(thm1_c1(p) / alpha);
    return PearsonData(std::move(phi), w);
}

/// Closed-form C_{n+1} without admissibility checks.
inline Scalar thm1_c_closed(const Thm1Params& p, long n) {
    const auto& lp = p.L.q_params();
    const Scalar r = p.a * p.a;
    auto q = [&](long k) { return Scalar(p.L.q_half_power(2 * k)); };
    const Scalar one(1);
    return lp.c1 * lp.c2 * (one + q(n - 2)) * (one - q(n + 1)) * (one + r * q(n)) * (one - r.inverse() * q(n - 1)) /
           ((one + q(2 * n - 2)) * (one + q(2 * n)));
}

/// (B_n, C_{n+1}) of the q-lattice family. Throws when r = a^2 hits
/// {q^{k-1}, -q^{-k} : 0 <= k <= n}, which is exactly where some C_{k+1} vanishes.
inline FamilyTerm thm1_family(const Thm1Params& p, long n) {
    detail::check_thm1_lattice(p);
    const Scalar r = p.a * p.a;
    const Scalar one(1);
    for (long k = 0; k <= n; ++k) {
        const Scalar qk1(p.L.q_half_power(2 * (k - 1)));
        const Scalar qmk(p.L.q_half_power(-2 * k));
        if (r == qk1)
            throw regularity_error("r = a^2 = q^" + std::to_string(k - 1) + " is excluded (C_" +
                                       std::to_string(k + 1) + " vanishes)",
                                   k);
        if (r == -qmk)
            throw regularity_error("r = a^2 = -q^" + std::to_string(-k) + " is excluded (C_" +
                                       std::to_string(k + 1) + " vanishes)",
                                   k);
    }
    return {p.L.c3(), thm1_c_closed(p, n)};
}

// ---------------------------------------------------------------------------
// Solution family on the linear lattice

struct Thm2Params {
    Lattice L;
    Scalar B0;
    Scalar C1;
};

/// 4 C1 / c5^2; the family exists iff this is not in {0, 1, 2, ...}.
inline Scalar thm2_ratio(const Thm2Params& p) {
    const Scalar& c5 = p.L.quadratic_params().c5;
    return Scalar(4) * p.C1 / (c5 * c5);
}

/// Index k with C_{k+1} = 0, if any.
inline std::optional<long> thm2_vanishing_index(const Thm2Params& p) {
    Scalar ratio = thm2_ratio(p);
    if (ratio.is_real() && ratio.re().get_den() == 1 && sgn(ratio.re()) >= 0) return ratio.re().get_num().get_si();
    return std::nullopt;
}

inline void check_thm2(const Thm2Params& p) {
    if (p.L.is_q()) throw std::invalid_argument("family needs a quadratic lattice");
    const auto& lp = p.L.quadratic_params();
    if (!lp.beta.is_zero()) throw std::invalid_argument("family exists only on the linear lattice (beta = 0)");
    if (lp.c5.is_zero()) throw std::invalid_argument("family needs c5 != 0");
    if (auto k = thm2_vanishing_index(p))
        throw regularity_error("4*C1/c5^2 = " + std::to_string(*k) + " is a nonnegative integer (C_" +
                                   std::to_string(*k + 1) + " vanishes)",
                               *k);
}

/// psi = z - B0, phi = -2 beta (z - B0) - C1.
inline PearsonData thm2_pearson(const Thm2Params& p) {
    const Poly w{-p.B0, 1};
    const Scalar beta = p.L.beta();
    Poly phi = Scalar(-2) * beta * w - Poly::constant(p.C1);
    return PearsonData(std::move(phi), w);
}

inline FamilyTerm thm2_family(const Thm2Params& p, long n) {
    check_thm2(p);
    const Scalar& c5 = p.L.quadratic_params().c5;
    const Scalar nn(n);
    return {p.B0, -c5 * c5 / Scalar(4) * (nn + Scalar(1)) * (nn - thm2_ratio(p))};
}

/// Meixner-II parameters the family maps onto: b1 = 0, b2 = -4 C1/c5^2.
inline MeixnerParams thm2_meixner_params(const Thm2Params& p) { return MeixnerParams(Scalar(0), -thm2_ratio(p)); }

/// The affine scale kappa = i c5 / 2 with P_n(z) = kappa^n M_n((z - B0)/kappa).
inline Scalar thm2_kappa(const Thm2Params& p) { return Scalar::i() * p.L.quadratic_params().c5 / Scalar(2); }

/// B_0..B_N and C_1..C_{N+1} of a family.
template <class Family, class Params>
RecurrencePair family_recurrence(Family family, const Params& p, long N) {
    RecurrencePair rec;
    for (long n = 0; n <= N; ++n) {
        auto t = family(p, n);
        rec.B.push_back(t.B);
        rec.C.push_back(t.C);
    }
    return rec;
}

inline RecurrencePair thm1_recurrence(const Thm1Params& p, long N) {
    return family_recurrence([](const Thm1Params& x, long n) { return thm1_family(x, n); }, p, N);
}

inline RecurrencePair thm2_recurrence(const Thm2Params& p, long N) {
    return family_recurrence([](const Thm2Params& x, long n) { return thm2_family(x, n); }, p, N);
}

// ---------------------------------------------------------------------------
// r from C_1

struct RRoots {
    Scalar plus, minus;
};

/// Roots of (q-1)c1c2 Z^2 + 2(C1 + 2(alpha^2-1)c1c2) Z - (1-q^{-1})c1c2 = 0,
/// i.e. Z = t +- sqrt(t^2 + q^{-1}) with t = (C1 + 2(alpha^2-1)c1c2)/((1-q)c1c2).
/// nullopt when the discriminant has no square root in Q(i).
inline std::optional<RRoots> r_roots_from_c1(const Lattice& L, const Scalar& C1) {
    if (!L.is_q()) throw std::invalid_argument("r-parametrization needs a q-quadratic lattice");
    const auto& lp = L.q_params();
    const Scalar c12 = lp.c1 * lp.c2;
    if (c12.is_zero()) throw std::invalid_argument("r-parametrization needs c1 c2 != 0");
    const Scalar q(L.q_half_power(2));
    const Scalar alpha = L.alpha();
    const Scalar t = (C1 + Scalar(2) * (alpha * alpha - Scalar(1)) * c12) / ((Scalar(1) - q) * c12);
    auto root = gaussian_sqrt(t * t + q.inverse());
    if (!root) return std::nullopt;
    return RRoots{t + *root, t - *root};
}

}  // namespace latops

#endif
