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

#ifndef LATOPS_TESTS_SUPPORT_HPP
#define LATOPS_TESTS_SUPPORT_HPP

#include <catch2/catch_amalgamated.hpp>

#include <latops/selftest.hpp>

namespace Catch {
template <>
struct StringMaker<latops::Scalar> {
    static std::string convert(const latops::Scalar& s) { return latops::to_string(s); }
};
template <>
struct StringMaker<latops::Poly> {
    static std::string convert(const latops::Poly& p) { return "[" + latops::to_string(p) + "]"; }
};
}  // namespace Catch

namespace support {

using namespace latops;

inline Scalar S(const char* text) { return parse_scalar(text); }
inline Poly P(const char* text) { return parse_poly(text); }
inline std::vector<Scalar> V(std::initializer_list<const char*> items) {
    std::vector<Scalar> out;
    for (auto* t : items) out.push_back(parse_scalar(t));
    return out;
}

/// Q = 1/2, c1 = c2 = 1, c3 = 0.
inline Lattice q_half() { return Lattice::q_quadratic(make_rational(1, 2), S("1"), S("1"), S("0")); }
/// x(s) = 4 s^2.
inline Lattice quadratic_unit() { return Lattice::quadratic(S("1"), S("0"), S("0")); }
/// x(s) = 2 s.
inline Lattice linear_two() { return Lattice::quadratic(S("0"), S("2"), S("0")); }

inline Thm1Params thm1_example() { return {q_half(), S("3")}; }
inline Thm2Params thm2_example() { return {linear_two(), S("0"), S("1/2")}; }

}  // namespace support

#endif
