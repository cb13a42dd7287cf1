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

#ifndef LATOPS_DDOPS_HPP
#define LATOPS_DDOPS_HPP

#include <string>
#include <vector>

#include "errors.hpp"
#include "lattice.hpp"

namespace latops {

enum class Op { dx, sx };

inline const char* to_string(Op op) { return op == Op::dx ? "dx" : "sx"; }

/// Images of the monomials 1, z, ..., z^N under the divided-difference
/// operator D_x and the averaging operator S_x of a lattice.
///
/// Columns are generated from D_x z = 1, S_x z = alpha z + beta and the
/// product rules
///   D_x z^{n+1} = S_x z^n + (S_x z) D_x z^n
///   S_x z^{n+1} = U2 D_x z^n + (S_x z) S_x z^n,
/// so building the table costs O(N^2) polynomial coefficient updates.
class OperatorTables {
   public:
    OperatorTables(Lattice L, std::size_t N) : lattice_(std::move(L)), N_(N) {
        const Poly sz{lattice_.beta(), lattice_.alpha()};
        const Poly U2 = structural_polys(lattice_).U2;
        D_.reserve(N + 1);
        S_.reserve(N + 1);
        D_.emplace_back();
        S_.push_back(Poly::constant(1));
        for (std::size_t n = 0; n < N; ++n) {
            Poly d = S_[n] + sz * D_[n];
            Poly s = U2 * D_[n] + sz * S_[n];
            D_.push_back(std::move(d));
            S_.push_back(std::move(s));
        }
    }

    const Lattice& lattice() const noexcept { return lattice_; }
    /// Highest monomial degree covered.
    std::size_t degree_bound() const noexcept { return N_; }

    /// D_x z^n (degree n-1) or S_x z^n (degree n).
    const Poly& column(Op op, std::size_t n) const {
        if (n > N_)
            throw degree_error("operator table covers degree " + std::to_string(N_) + ", asked for " +
                               std::to_string(n));
        return op == Op::dx ? D_[n] : S_[n];
    }

   private:
    Lattice lattice_;
    std::size_t N_;
    std::vector<Poly> D_, S_;
};

inline OperatorTables build_tables(const Lattice& L, std::size_t N) { return OperatorTables(L, N); }

/// Exact image of p; deg p must not exceed the table bound.
inline Poly apply(Op op, const OperatorTables& T, const Poly& p) {
    if (p.degree() > static_cast<long>(T.degree_bound()))
        throw degree_error("polynomial of degree " + std::to_string(p.degree()) + " exceeds table bound " +
                           std::to_string(T.degree_bound()));
    std::vector<Scalar> acc(p.size());
    for (std::size_t k = 0; k < p.size(); ++k) {
        const Scalar& pk = p.coeffs()[k];
        if (pk.is_zero()) continue;
        const Poly& col = T.column(op, k);
        for (std::size_t j = 0; j < col.size(); ++j) acc[j] += pk * col.coeffs()[j];
    }
    return Poly(std::move(acc));
}

/// D_x^k p (k = 0 returns p).
inline Poly apply_power(Op op, const OperatorTables& T, Poly p, std::size_t k) {
    for (std::size_t j = 0; j < k && !p.is_zero(); ++j) p = apply(op, T, p);
    return p;
}

/// D_x p or S_x p evaluated at x(s) straight from the defining difference
/// quotient / average, without the tables.
inline Scalar pointwise_oracle(Op op, const Lattice& L, const Poly& p, const Rational& s) {
    const Rational half(1, 2);
    Scalar xp = x_eval(L, s + half);
    Scalar xm = x_eval(L, s - half);
    Scalar fp = p(xp);
    Scalar fm = p(xm);
    if (op == Op::sx) return (fp + fm) / Scalar(2);
    if (xp == xm) throw std::domain_error("degenerate lattice step at s = " + to_string(s));
    return (fp - fm) / (xp - xm);
}

/// gamma_1 gamma_2 ... gamma_m (gamma_0! = 1).
inline Scalar gamma_factorial(const Lattice& L, long m) {
    Scalar out(1);
    for (long j = 1; j <= m; ++j) out *= L.gamma_n(j);
    return out;
}

/// P^{[k]}_n = (gamma_n! / gamma_{n+k}!) D_x^k P_{n+k} for every n with n + k < P.size().
inline std::vector<Poly> derived_sequence(const OperatorTables& T, const std::vector<Poly>& P, std::size_t k) {
    if (k == 0) return P;
    std::vector<Poly> out;
    if (P.size() <= k) return out;
    out.reserve(P.size() - k);
    const Lattice& L = T.lattice();
    for (std::size_t n = 0; n + k < P.size(); ++n) {
        Scalar denom(1);
        for (std::size_t j = 1; j <= k; ++j) denom *= L.gamma_n(static_cast<long>(n + j));
        if (denom.is_zero())
            throw regularity_error("gamma factorial quotient vanishes", static_cast<long>(n));
        out.push_back(apply_power(Op::dx, T, P[n + k], k) * denom.inverse());
    }
    return out;
}

}  // namespace latops

#endif
