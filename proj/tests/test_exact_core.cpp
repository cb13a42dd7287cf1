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

TEST_CASE("rationals parse to canonical form") {
    CHECK(parse_rational("25/12") == make_rational(25, 12));
    CHECK(to_string(parse_rational("-3/6")) == "-1/2");
    CHECK(to_string(parse_rational("4/2")) == "2");
    CHECK(to_string(parse_rational("0/7")) == "0");
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("scalar grammar") {
    CHECK(S("25/12") == Scalar(make_rational(25, 12)));
    CHECK(S("-1/2+3*i") == Scalar(make_rational(-1, 2), Rational(3)));
    CHECK(S("i") == Scalar::i());
    CHECK(S("-i") == -Scalar::i());
    CHECK(S("2*i") == Scalar(Rational(0), Rational(2)));
    CHECK(S("1/2+i") == Scalar(make_rational(1, 2), Rational(1)));
    CHECK(S("-1/3*i") == Scalar(Rational(0), make_rational(-1, 3)));
    CHECK_THROWS_AS(S("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(S("2i"), std::invalid_argument);
    CHECK_THROWS_AS(S("1+*i"), std::invalid_argument);
    CHECK_THROWS_AS(S(""), std::invalid_argument);

    CHECK(to_string(S("1/2-3/4*i")) == "1/2-3/4*i");
    CHECK(to_string(S("-i")) == "-1*i");
    CHECK(to_string(S("7")) == "7");
}

TEST_CASE("scalar text round-trips") {
    RandomSource rs(11);
    for (int k = 0; k < 200; ++k) {
        Scalar z = rs.scalar();
        CHECK(parse_scalar(to_string(z)) == z);
    }
}

TEST_CASE("field laws hold exactly") {
    RandomSource rs(12);
    for (int k = 0; k < 200; ++k) {
        Scalar a = rs.scalar(), b = rs.scalar(), c = rs.scalar();
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        if (!a.is_zero()) CHECK(a * a.inverse() == Scalar(1));
        if (!b.is_zero()) CHECK((a / b) * b == a);
    }
    CHECK_THROWS_AS(Scalar(0).inverse(), std::domain_error);
    CHECK(Scalar::i() * Scalar::i() == Scalar(-1));
}

TEST_CASE("powers and square roots") {
    CHECK(pow(S("1/2"), -3) == S("8"));
    CHECK(pow(S("1+i"), 2) == S("2*i"));
    CHECK(pow(S("i"), -1) == S("-i"));
    CHECK(rational_pow(make_rational(2, 3), 0) == 1);
    CHECK(*gaussian_sqrt(S("9/4")) == S("3/2"));
    CHECK(*gaussian_sqrt(S("-4")) == S("2*i"));
    CHECK(*gaussian_sqrt(S("2*i")) == S("1+i"));
    CHECK_FALSE(gaussian_sqrt(S("2")).has_value());
    CHECK_FALSE(gaussian_sqrt(S("i")).has_value());
}

TEST_CASE("polynomial arithmetic") {
    CHECK(P("1") + P("0,1") == P("1,1"));
    CHECK(P("0,1") * P("0,1") == P("0,0,1"));
    CHECK(P("2,4") * S("1/2") == P("1,2"));
    CHECK(P("1,1") - P("0,1") == P("1"));
    CHECK((P("1,1") - P("1,1")).is_zero());
    CHECK((P("1,1") - P("1,1")).degree() == -1);
    CHECK(P("1,2,0,0").degree() == 1);
    CHECK(P("0,0,1")(S("5/2")) == S("25/4"));
    CHECK(Poly()(S("3")) == S("0"));
    CHECK(P("1,1")(S("i")) == S("1+i"));
    CHECK(P("1,2,3").derivative() == P("2,6"));
    CHECK(to_string(P("1/2,0,-1")) == "1/2,0,-1");
    CHECK(to_string(Poly()) == "0");
}

TEST_CASE("affine substitution") {
    CHECK(affine_map(P("0,0,1"), S("1"), S("0")) == P("0,0,1"));
    CHECK(affine_map(P("0,1"), S("2"), S("3")) == P("3,2"));
    CHECK(affine_map(P("-1/2,0,1"), S("i"), S("0")) == P("-1/2,0,-1"));
    CHECK_THROWS_AS(affine_map(P("0,1"), S("0"), S("1")), std::invalid_argument);

    RandomSource rs(13);
    for (int k = 0; k < 100; ++k) {
        Poly p = rs.poly(rs.integer(0, 6));
        Scalar lambda = rs.nonzero_scalar();
        Scalar mu = rs.scalar();
        CHECK(affine_map(affine_map(p, lambda, mu), lambda.inverse(), -mu / lambda) == p);
    }
}

TEST_CASE("three-term recurrence builder") {
    RecurrencePair rec{V({"0", "0"}), V({"1/2"})};
    auto P2 = ttrr_build(rec, 2);
    CHECK(P2[2] == P("-1/2,0,1"));
    CHECK(ttrr_build(rec, 0) == std::vector<Poly>{P("1")});

    // Meixner-II, b1 = 0, b2 = 1/2: B_n = 0, C_n = n(n - 1/2)
    MeixnerParams mp(S("0"), S("1/2"));
    auto mrec = family_recurrence([](const MeixnerParams& p, long n) { return meixner2_coeffs(p, n); }, mp, 3);
    CHECK(ttrr_build(mrec, 2)[2] == P("-1/2,0,1"));

    RecurrencePair zero{V({"0", "0", "0"}), V({"1", "0"})};
    try {
        ttrr_build(zero, 3);
        FAIL("zero C_2 accepted");
    } catch (const regularity_error& e) {
        CHECK(e.index() == 2);
    }
    CHECK_THROWS_AS(ttrr_build(rec, 3), std::invalid_argument);
}

TEST_CASE("recurrence output is simple and monic") {
    RandomSource rs(14);
    for (int k = 0; k < 50; ++k) {
        RecurrencePair rec;
        const long N = rs.integer(0, 12);
        for (long n = 0; n < N; ++n) {
            rec.B.push_back(rs.scalar());
            rec.C.push_back(rs.nonzero_scalar());
        }
        auto P = ttrr_build(rec, static_cast<std::size_t>(N));
        for (long n = 0; n <= N; ++n) {
            CHECK(P[static_cast<std::size_t>(n)].degree() == n);
            CHECK(P[static_cast<std::size_t>(n)].is_monic());
        }
    }
}
