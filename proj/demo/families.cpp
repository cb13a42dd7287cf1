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

// Builds the two solution families, prints their recurrence data and runs the
// cross-validation reports.

#include <iostream>

#include <latops/io.hpp>

using namespace latops;

namespace {

void print_recurrence(const RecurrencePair& rec) {
    for (std::size_t n = 0; n < rec.B.size(); ++n)
        std::cout << "  n=" << n << "  B=" << to_string(rec.B[n]) << "  C_{n+1}=" << to_string(rec.C[n]) << '\n';
}

void print_report(const Report& r) {
    std::cout << r.subject << ": " << (r.passed() ? "pass" : "fail") << '\n';
    for (const auto& c : r.checks) {
        std::cout << "  " << c.name << " [" << c.lo << "," << c.hi << "] " << to_string(c.status);
        if (c.witness) std::cout << "  n=" << c.witness->n << "  " << c.witness->lhs << " vs " << c.witness->rhs;
        std::cout << '\n';
    }
}

}  // namespace

int main() {
    const Lattice linear = Lattice::quadratic(Scalar(0), Scalar(2), Scalar(0));
    const Thm2Params meixner{linear, Scalar(0), parse_scalar("1/2")};
    std::cout << "linear lattice x(s) = 2s, B0 = 0, C1 = 1/2\n";
    print_recurrence(thm2_recurrence(meixner, 4));
    print_report(cross_validate_thm2(meixner, 10));

    const Lattice q = Lattice::q_quadratic(make_rational(1, 2), Scalar(1), Scalar(1), Scalar(0));
    const Thm1Params aw{q, Scalar(3)};
    std::cout << "\nq-lattice Q = 1/2, a = 3\n";
    print_recurrence(thm1_recurrence(aw, 4));
    print_report(cross_validate_thm1(aw, 10));

    std::cout << "\nbeta = 1 lattice\n";
    print_report(nonexistence_quadratic(Lattice::quadratic(Scalar(1), Scalar(1), Scalar(0)), Scalar(0), Scalar(1)));
    return 0;
}
