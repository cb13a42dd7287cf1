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

#ifndef LATOPS_RECURRENCE_HPP
#define LATOPS_RECURRENCE_HPP

#include <string>
#include <vector>

#include "errors.hpp"
#include "poly.hpp"

namespace latops {

/// Coefficients of a monic three-term recurrence
///   P_{n+1} = (z - B_n) P_n - C_n P_{n-1},  P_{-1} = 0, P_0 = 1.
/// B[k] holds B_k; C[k] holds C_{k+1} (C_0 is never used).
struct RecurrencePair {
    std::vector<Scalar> B;
    std::vector<Scalar> C;

    const Scalar& b(std::size_t n) const { return B.at(n); }
    /// C_n for n >= 1.
    const Scalar& c(std::size_t n) const { return C.at(n - 1); }

    friend bool operator==(const RecurrencePair&, const RecurrencePair&) = default;
};

/// P_0..P_N from the recurrence. Needs B_0..B_{N-1} and C_1..C_{N-1}, all C nonzero.
inline std::vector<Poly> ttrr_build(const RecurrencePair& rec, std::size_t N) {
    if (rec.B.size() < N)
        throw std::invalid_argument("recurrence needs B_0..B_" + std::to_string(N - 1) + ", got " +
                                    std::to_string(rec.B.size()) + " values");
    if (N >= 1 && rec.C.size() < N - 1)
        throw std::invalid_argument("recurrence needs C_1..C_" + std::to_string(N - 1) + ", got " +
                                    std::to_string(rec.C.size()) + " values");
    for (std::size_t n = 1; n < N; ++n)
        if (rec.c(n).is_zero())
            throw regularity_error("C_" + std::to_string(n) + " vanishes", static_cast<long>(n));

    std::vector<Poly> P;
    P.reserve(N + 1);
    P.push_back(Poly::constant(1));
    if (N == 0) return P;
    P.push_back(Poly{-rec.b(0), 1});
    for (std::size_t n = 1; n < N; ++n) {
        Poly next = Poly{-rec.b(n), 1} * P[n] - rec.c(n) * P[n - 1];
        P.push_back(std::move(next));
    }
    return P;
}

}  // namespace latops

#endif
