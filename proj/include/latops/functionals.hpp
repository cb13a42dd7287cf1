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

#ifndef LATOPS_FUNCTIONALS_HPP
#define LATOPS_FUNCTIONALS_HPP

#include <algorithm>
#include <string>
#include <vector>

#include "ddops.hpp"
#include "recurrence.hpp"

namespace latops {

/// Truncated linear functional on polynomials: m_k = <u, z^k>.
/// Only the first valid_len moments are trustworthy; every operation below
/// states how much it shrinks that prefix.
struct MomentFunctional {
    std::vector<Scalar> moments;
    std::size_t valid_len = 0;

    MomentFunctional() = default;
    explicit MomentFunctional(std::vector<Scalar> m) : moments(std::move(m)), valid_len(moments.size()) {}
    MomentFunctional(std::vector<Scalar> m, std::size_t valid) : moments(std::move(m)), valid_len(valid) {
        if (valid_len > moments.size()) throw std::invalid_argument("valid_len exceeds stored moments");
    }

    /// Moments restricted to the valid prefix.
    std::vector<Scalar> valid() const {
        return {moments.begin(), moments.begin() + static_cast<std::ptrdiff_t>(valid_len)};
    }

    friend bool operator==(const MomentFunctional& a, const MomentFunctional& b) {
        return a.valid_len == b.valid_len && a.valid() == b.valid();
    }
};

/// Pearson data phi = a z^2 + b z + c (deg <= 2), psi = d z + e (d != 0).
struct PearsonData {
    Poly phi;
    Poly psi;

    PearsonData(Poly phi_, Poly psi_) : phi(std::move(phi_)), psi(std::move(psi_)) {
        if (phi.degree() > 2) throw std::invalid_argument("phi must have degree at most 2");
        if (psi.degree() != 1) throw std::invalid_argument("psi must have degree exactly 1");
    }

    Scalar a() const { return phi[2]; }
    Scalar b() const { return phi[1]; }
    Scalar c() const { return phi[0]; }
    Scalar d() const { return psi[1]; }
    Scalar e() const { return psi[0]; }
};

/// <u, p>
inline Scalar act(const MomentFunctional& u, const Poly& p) {
    if (p.degree() >= static_cast<long>(u.valid_len))
        throw degree_error("functional has " + std::to_string(u.valid_len) + " valid moments, polynomial degree " +
                           std::to_string(p.degree()));
    Scalar acc;
    for (std::size_t k = 0; k < p.size(); ++k) acc += p.coeffs()[k] * u.moments[k];
    return acc;
}

/// f u, defined by <f u, g> = <u, f g>. Loses deg f valid moments.
inline MomentFunctional left_multiply(const Poly& f, const MomentFunctional& u) {
    if (f.is_zero()) return MomentFunctional(std::vector<Scalar>(u.valid_len));
    auto shrink = static_cast<std::size_t>(f.degree());
    std::size_t len = u.valid_len > shrink ? u.valid_len - shrink : 0;
    std::vector<Scalar> out(len);
    for (std::size_t k = 0; k < len; ++k)
        for (std::size_t j = 0; j < f.size(); ++j) out[k] += f.coeffs()[j] * u.moments[j + k];
    return MomentFunctional(std::move(out));
}

/// Dual operators: <D_x u, f> = -<u, D_x f>, <S_x u, f> = <u, S_x f>.
/// No shrinkage, since D_x z^k and S_x z^k have degree <= k.
inline MomentFunctional transform(Op op, const OperatorTables& T, const MomentFunctional& u) {
    if (u.valid_len == 0) throw std::invalid_argument("functional has no valid moments");
    if (u.valid_len - 1 > T.degree_bound())
        throw degree_error("operator table bound " + std::to_string(T.degree_bound()) + " below functional length " +
                           std::to_string(u.valid_len));
    std::vector<Scalar> out(u.valid_len);
    for (std::size_t k = 0; k < u.valid_len; ++k) {
        Scalar v = act(u, T.column(op, k));
        out[k] = op == Op::dx ? -v : v;
    }
    return MomentFunctional(std::move(out));
}

/// D_x^k u (or S_x^k u).
inline MomentFunctional transform_power(Op op, const OperatorTables& T, MomentFunctional u, std::size_t k) {
    for (std::size_t j = 0; j < k; ++j) u = transform(op, T, u);
    return u;
}

inline MomentFunctional scale(const Scalar& s, MomentFunctional u) {
    for (std::size_t k = 0; k < u.valid_len; ++k) u.moments[k] *= s;
    return u;
}

/// a + b, valid on the shorter prefix.
inline MomentFunctional add(const MomentFunctional& a, const MomentFunctional& b) {
    std::size_t len = std::min(a.valid_len, b.valid_len);
    std::vector<Scalar> out(len);
    for (std::size_t k = 0; k < len; ++k) out[k] = a.moments[k] + b.moments[k];
    return MomentFunctional(std::move(out));
}

inline MomentFunctional subtract(const MomentFunctional& a, const MomentFunctional& b) {
    return add(a, scale(Scalar(-1), b));
}

/// The functional a_n with <a_n, P_m> = delta_{n,m} for 0 <= m <= M, moments 0..M.
/// The system is lower triangular in the monomial basis.
inline MomentFunctional dual_basis(const std::vector<Poly>& P, std::size_t n, std::size_t M) {
    if (P.size() < M + 1)
        throw std::invalid_argument("dual basis to depth " + std::to_string(M) + " needs P_0..P_" + std::to_string(M));
    std::vector<Scalar> m(M + 1);
    for (std::size_t j = 0; j <= M; ++j) {
        if (P[j].degree() != static_cast<long>(j))
            throw std::invalid_argument("sequence is not simple: deg P_" + std::to_string(j) + " = " +
                                        std::to_string(P[j].degree()));
        Scalar rhs = j == n ? Scalar(1) : Scalar(0);
        for (std::size_t k = 0; k < j; ++k) rhs -= P[j].coeffs()[k] * m[k];
        m[j] = rhs / P[j].leading();
    }
    return MomentFunctional(std::move(m));
}

/// phi D_x z^n + psi S_x z^n; <u, .> of this vanishes for every n iff D_x(phi u) = S_x(psi u).
inline Poly pearson_combination(const PearsonData& pd, const OperatorTables& T, std::size_t n) {
    return pd.phi * T.column(Op::dx, n) + pd.psi * T.column(Op::sx, n);
}

/// Moments m_0..m_N of the solution of D_x(phi u) = S_x(psi u) normalized by m_0 = 1.
/// The n-th relation has degree n+1 with leading coefficient d_n and fixes m_{n+1}.
inline MomentFunctional pearson_moments(const PearsonData& pd, const OperatorTables& T, std::size_t N) {
    if (N > 0 && N - 1 > T.degree_bound())
        throw degree_error("pearson solve to m_" + std::to_string(N) + " needs tables to degree " +
                           std::to_string(N - 1));
    std::vector<Scalar> m;
    m.reserve(N + 1);
    m.emplace_back(1);
    for (std::size_t n = 0; n < N; ++n) {
        Poly comb = pearson_combination(pd, T, n);
        Scalar lead = comb[n + 1];
        if (lead.is_zero())
            throw regularity_error("d_" + std::to_string(n) + " vanishes: Pearson relation cannot fix m_" +
                                       std::to_string(n + 1),
                                   static_cast<long>(n));
        Scalar acc;
        for (std::size_t k = 0; k <= n; ++k) acc += comb[k] * m[k];
        m.push_back(-acc / lead);
    }
    return MomentFunctional(std::move(m));
}

/// <D_x(phi u) - S_x(psi u), z^k> = -<u, phi D_x z^k + psi S_x z^k>.
inline Scalar pearson_residual(const PearsonData& pd, const OperatorTables& T, const MomentFunctional& u,
                               std::size_t k) {
    if (k + 2 > u.valid_len)
        throw degree_error("Pearson residual at k = " + std::to_string(k) + " needs " + std::to_string(k + 2) +
                           " valid moments");
    return -act(u, pearson_combination(pd, T, k));
}

/// Gram-Schmidt against u: B_0..B_{N-1} and C_1..C_N, with
/// B_n = <u, z P_n^2>/<u, P_n^2>, C_{n+1} = <u, P_{n+1}^2>/<u, P_n^2>.
inline RecurrencePair recurrence_from_moments(const MomentFunctional& u, std::size_t N) {
    if (u.valid_len < 2 * N + 1)
        throw degree_error("recurrence to depth " + std::to_string(N) + " needs " + std::to_string(2 * N + 1) +
                           " valid moments, have " + std::to_string(u.valid_len));
    RecurrencePair rec;
    Poly prev;
    Poly cur = Poly::constant(1);
    Scalar norm = u.moments.at(0);
    if (norm.is_zero()) throw regularity_error("<u, P_0^2> vanishes", 0);
    for (std::size_t n = 0; n < N; ++n) {
        Poly sq = cur * cur;
        Scalar b = act(u, Poly::z() * sq) / norm;
        Poly next = Poly{-b, 1} * cur;
        if (n > 0) next -= rec.C.back() * prev;
        Scalar next_norm = act(u, next * next);
        if (next_norm.is_zero())
            throw regularity_error("<u, P_" + std::to_string(n + 1) + "^2> vanishes: functional not regular",
                                   static_cast<long>(n + 1));
        rec.B.push_back(b);
        rec.C.push_back(next_norm / norm);
        prev = std::move(cur);
        cur = std::move(next);
        norm = std::move(next_norm);
    }
    return rec;
}

/// Moments of the functional (m_0 = 1) whose monic OPS has the given recurrence.
/// With B_0..B_{nb-1}, C_1..C_{nc} the moments m_k are determined for k <= min(2 nb, 2 nc + 1):
/// B_j enters first at k = 2j+1, C_j at k = 2j.
inline MomentFunctional moments_from_recurrence(const RecurrencePair& rec) {
    const std::size_t nb = rec.B.size();
    const std::size_t nc = rec.C.size();
    const std::size_t last = std::min(2 * nb, 2 * nc + 1);
    // row[j] = coefficient of P_j in z^k
    std::vector<Scalar> row{Scalar(1)};
    std::vector<Scalar> m{Scalar(1)};
    for (std::size_t k = 1; k <= last; ++k) {
        std::vector<Scalar> next(row.size() + 1);
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (row[j].is_zero()) continue;
            // z P_j = P_{j+1} + B_j P_j + C_j P_{j-1}
            next[j + 1] += row[j];
            if (j < nb) next[j] += rec.B[j] * row[j];
            if (j >= 1 && j <= nc) next[j - 1] += rec.C[j - 1] * row[j];
        }
        row = std::move(next);
        m.push_back(row[0]);
    }
    return MomentFunctional(std::move(m));
}

}  // namespace latops

#endif
