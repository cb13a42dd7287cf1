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

#include "support.hpp"

using namespace support;

TEST_CASE("structure sequences") {
    const Lattice L = q_half();
    CHECK(L.alpha() == S("5/4"));
    CHECK(L.beta() == S("0"));
    CHECK(L.alpha_n(2) == S("17/8"));
    CHECK(L.gamma_n(2) == S("5/2"));
    for (const Lattice& M : {q_half(), quadratic_unit(), linear_two()}) {
        auto s = lattice_seq(M, 0);
        CHECK(s.alpha_n == S("1"));
        CHECK(s.gamma_n == S("0"));
        CHECK(s.beta_n == S("0"));
        CHECK(M.gamma_n(1) == S("1"));
        CHECK(M.alpha_n(-1) == M.alpha());
        CHECK(M.gamma_n(-1) == S("-1"));
    }
    auto s3 = lattice_seq(quadratic_unit(), 3);
    CHECK(s3.beta_n == S("9"));
    CHECK(s3.gamma_n == S("3"));
    CHECK(s3.alpha_n == S("1"));

    const Lattice shifted = Lattice::q_quadratic(make_rational(1, 2), S("1"), S("1"), S("2"));
    CHECK(shifted.beta() == S("-1/2"));
    CHECK(shifted.beta_n(2) == S("-9/4"));
}

TEST_CASE("alpha + alpha_n gamma_n = alpha_{n-1} gamma_{n+1}") {
    RandomSource rs(21);
    for (int t = 0; t < 20; ++t) {
        for (bool q : {true, false}) {
            const Lattice L = rs.lattice(q);
            for (long n = -3; n <= 30; ++n)
                CHECK(L.alpha() + L.alpha_n(n) * L.gamma_n(n) == L.alpha_n(n - 1) * L.gamma_n(n + 1));
        }
    }
}

TEST_CASE("structural polynomials") {
    auto U = structural_polys(q_half());
    CHECK(U.U1 == P("0,9/16"));
    CHECK(U.U2 == P("-9/4,0,9/16"));
    U = structural_polys(linear_two());
    CHECK(U.U1.is_zero());
    CHECK(U.U2 == P("1"));
    U = structural_polys(quadratic_unit());
    CHECK(U.U1 == P("2"));
    CHECK(U.U2 == P("0,4"));
}

TEST_CASE("U2 is the squared half step") {
    RandomSource rs(22);
    for (int t = 0; t < 20; ++t) {
        for (bool q : {true, false}) {
            const Lattice L = rs.lattice(q);
            const Poly U2 = structural_polys(L).U2;
            for (long j = -4; j <= 6; ++j) {
                const Rational s = make_rational(j, 2);
                const Scalar h = (x_eval(L, s + make_rational(1, 2)) - x_eval(L, s - make_rational(1, 2))) / Scalar(2);
                CHECK(U2(x_eval(L, s)) == h * h);
            }
        }
    }
}

TEST_CASE("lattice nodes") {
    CHECK(x_eval(q_half(), Rational(0)) == S("2"));
    CHECK(x_eval(q_half(), make_rational(1, 2)) == S("5/2"));
    CHECK(x_eval(quadratic_unit(), Rational(1)) == S("4"));
    CHECK(x_eval(linear_two(), make_rational(3, 2)) == S("3"));
    CHECK(x_eval(linear_two(), make_rational(1, 3)) == S("2/3"));
    CHECK_THROWS_AS(x_eval(q_half(), make_rational(1, 3)), std::invalid_argument);
}

TEST_CASE("x(s+1/2) + x(s-1/2) = 2 alpha x(s) + 2 beta") {
    RandomSource rs(23);
    for (int t = 0; t < 30; ++t) {
        for (bool q : {true, false}) {
            const Lattice L = rs.lattice(q);
            const Rational s = make_rational(rs.integer(-8, 8), 2);
            const Rational h = make_rational(1, 2);
            CHECK(x_eval(L, s + h) + x_eval(L, s - h) == Scalar(2) * L.alpha() * x_eval(L, s) + Scalar(2) * L.beta());
        }
    }
}

TEST_CASE("lattice validation") {
    CHECK_THROWS_AS(Lattice::q_quadratic(Rational(0), S("1"), S("1"), S("0")), std::invalid_argument);
    CHECK_THROWS_AS(Lattice::q_quadratic(Rational(-2), S("1"), S("1"), S("0")), std::invalid_argument);
    CHECK_THROWS_AS(Lattice::q_quadratic(Rational(1), S("1"), S("1"), S("0")), std::invalid_argument);
    CHECK_THROWS_AS(Lattice::q_quadratic(make_rational(1, 2), S("0"), S("0"), S("0")), std::invalid_argument);
    CHECK_NOTHROW(Lattice::q_quadratic(make_rational(1, 2), S("0"), S("1"), S("0")));
    CHECK_THROWS_AS(Lattice::quadratic(S("0"), S("0"), S("1")), std::invalid_argument);
    CHECK(q_half() == q_half());
    CHECK_FALSE(q_half() == linear_two());
}
