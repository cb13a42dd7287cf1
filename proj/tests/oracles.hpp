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

#ifndef LATOPS_TESTS_ORACLES_HPP
#define LATOPS_TESTS_ORACLES_HPP

// Independent reference computations for the unit suites. Nothing here uses
// the operator tables, the Gram-Schmidt routine or the closed forms.

#include <latops/families.hpp>

#include <optional>
#include <vector>

namespace oracle {

using latops::Lattice;
using latops::Poly;
using latops::Rational;
using latops::Scalar;

/// Determinant by Gaussian elimination over Q(i).
inline Scalar det(std::vector<std::vector<Scalar>> a) {
    const std::size_t n = a.size();
    Scalar out(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c].is_zero()) ++p;
        if (p == n) return Scalar(0);
        if (p != c) {
            std::swap(a[p], a[c]);
            out = -out;
        }
        out *= a[c][c];
        const Scalar inv = a[c][c].inverse();
        for (std::size_t r = c + 1; r < n; ++r) {
            if (a[r][c].is_zero()) continue;
            const Scalar f = a[r][c] * inv;
            for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
        }
    }
    return out;
}

/// Solves a x = b; nullopt when a is singular.
inline std::optional<std::vector<Scalar>> solve(std::vector<std::vector<Scalar>> a, std::vector<Scalar> b) {
    const std::size_t n = a.size();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c].is_zero()) ++p;
        if (p == n) return std::nullopt;
        std::swap(a[p], a[c]);
        std::swap(b[p], b[c]);
        const Scalar inv = a[c][c].inverse();
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || a[r][c].is_zero()) continue;
            const Scalar f = a[r][c] * inv;
            for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
            b[r] -= f * b[c];
        }
    }
    for (std::size_t c = 0; c < n; ++c) b[c] /= a[c][c];
    return b;
}

/// Hankel determinant det(m_{i+j})_{0<=i,j<=n}.
inline Scalar hankel(const std::vector<Scalar>& m, std::size_t n) {
    std::vector<std::vector<Scalar>> a(n + 1, std::vector<Scalar>(n + 1));
    for (std::size_t i = 0; i <= n; ++i)
        for (std::size_t j = 0; j <= n; ++j) a[i][j] = m.at(i + j);
    return det(a);
}

/// Monic orthogonal P_n from the moment equations sum_k c_k m_{i+k} = -m_{i+n}, i < n.
inline Poly monic_orthogonal(const std::vector<Scalar>& m, std::size_t n) {
    std::vector<std::vector<Scalar>> a(n, std::vector<Scalar>(n));
    std::vector<Scalar> b(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) a[i][k] = m.at(i + k);
        b[i] = -m.at(i + n);
    }
    auto c = solve(a, b);
    if (!c) throw std::domain_error("singular Hankel system");
    c->push_back(Scalar(1));
    return Poly(*c);
}

/// B_0..B_{N-1} and C_1..C_N from Hankel determinants:
/// C_n = H_{n-2} H_n / H_{n-1}^2 and B_n = s_n - s_{n+1} with s_n the subleading coefficient of P_n.
inline latops::RecurrencePair hankel_recurrence(const std::vector<Scalar>& m, std::size_t N) {
    latops::RecurrencePair rec;
    std::vector<Scalar> H;
    for (std::size_t n = 0; n <= N; ++n) H.push_back(hankel(m, n));
    auto sub = [&](std::size_t n) { return n == 0 ? Scalar(0) : monic_orthogonal(m, n)[n - 1]; };
    for (std::size_t n = 0; n < N; ++n) {
        rec.B.push_back(sub(n) - sub(n + 1));
        const Scalar prev2 = n == 0 ? Scalar(1) : H[n - 1];
        rec.C.push_back(prev2 * H[n + 1] / (H[n] * H[n]));
    }
    return rec;
}

/// Lagrange interpolation through (x_k, y_k).
inline Poly interpolate(const std::vector<Scalar>& x, const std::vector<Scalar>& y) {
    Poly out;
    for (std::size_t k = 0; k < x.size(); ++k) {
        Poly basis = Poly::constant(1);
        Scalar denom(1);
        for (std::size_t j = 0; j < x.size(); ++j) {
            if (j == k) continue;
            basis = basis * Poly{-x[j], Scalar(1)};
            denom *= x[k] - x[j];
        }
        out = out + (y[k] / denom) * basis;
    }
    return out;
}

/// The image of z^n under D_x or S_x, rebuilt from the pointwise definition at
/// n+1 distinct nondegenerate nodes x(s), s = 1/2, 1, 3/2, ...
inline Poly column_by_interpolation(latops::Op op, const Lattice& L, std::size_t n) {
    const Poly zn = Poly::monomial(n, Scalar(1));
    std::vector<Scalar> xs, ys;
    for (long j = 1; xs.size() < n + 1; ++j) {
        const Rational s = latops::make_rational(j, 2);
        Scalar y;
        try {
            y = latops::pointwise_oracle(op, L, zn, s);
            latops::pointwise_oracle(latops::Op::dx, L, zn, s);
        } catch (const std::domain_error&) {
            continue;
        }
        const Scalar x = latops::x_eval(L, s);
        bool fresh = true;
        for (const auto& seen : xs) fresh = fresh && seen != x;
        if (!fresh) continue;
        xs.push_back(x);
        ys.push_back(y);
    }
    return interpolate(xs, ys);
}

}  // namespace oracle

#endif
