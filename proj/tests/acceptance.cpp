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

// Acceptance harness: one line per criterion, exact equality throughout.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <latops/io.hpp>
#include <latops/selftest.hpp>

using namespace latops;

namespace {

struct Outcome {
    bool pass = true;
    std::string note;

    void fail(const std::string& what) {
        if (pass) note = what;
        pass = false;
    }
};

Scalar S(const char* t) { return parse_scalar(t); }

Lattice q_half() { return Lattice::q_quadratic(make_rational(1, 2), S("1"), S("1"), S("0")); }
Lattice quadratic_unit() { return Lattice::quadratic(S("1"), S("0"), S("0")); }
Lattice linear_two() { return Lattice::quadratic(S("0"), S("2"), S("0")); }

std::string failed_checks(const Report& r) {
    std::vector<std::string> parts;
    if (r.error) parts.push_back("error: " + *r.error);
    for (const auto& c : r.checks) {
        if (c.status == Status::pass) continue;
        parts.push_back(c.witness ? c.name + " at n=" + std::to_string(c.witness->n) : c.name);
    }
    std::string out;
    for (const auto& p : parts) out += (out.empty() ? "" : "; ") + p;
    return out;
}

Outcome operators() {
    Outcome o;
    const long D = 30;
    for (const auto& L : {q_half(), quadratic_unit(), linear_two()}) {
        const auto T = build_tables(L, D);
        for (long n = 0; n <= D; ++n) {
            const auto un = static_cast<std::size_t>(n);
            const Poly zn = Poly::monomial(un, Scalar(1));
            const Poly d = apply(Op::dx, T, zn);
            const Poly s = apply(Op::sx, T, zn);
            long points = 0;
            for (long j = 1; points < n + 2; ++j) {
                const Rational h = make_rational(j, 2);
                Scalar dv;
                try {
                    dv = pointwise_oracle(Op::dx, L, zn, h);
                } catch (const std::domain_error&) {
                    continue;
                }
                const Scalar x = x_eval(L, h);
                if (d(x) != dv || s(x) != pointwise_oracle(Op::sx, L, zn, h))
                    o.fail("pointwise mismatch at degree " + std::to_string(n));
                ++points;
            }
            if (n == 0) continue;
            Scalar sub_d, sub_s;
            if (L.is_q()) {
                sub_d = (Scalar(n) * L.gamma_n(n - 1) - Scalar(n - 1) * L.gamma_n(n)) * L.c3();
                sub_s = Scalar(n) * (L.alpha_n(n - 1) - L.alpha_n(n)) * L.c3();
            } else {
                sub_d = L.beta() * Scalar(n * (n - 1) * (2 * n - 1)) / Scalar(3);
                sub_s = L.beta() * Scalar(n * (2 * n - 1));
            }
            if (d[un - 1] != L.gamma_n(n) || s[un] != L.alpha_n(n))
                o.fail("leading coefficient at " + std::to_string(n));
            if ((n >= 2 && d[un - 2] != sub_d) || s[un - 1] != sub_s)
                o.fail("subleading coefficient at " + std::to_string(n));
        }
    }
    if (o.pass) o.note = "3 lattices, degrees 0..30, deg+2 nodes each";
    return o;
}

Outcome identity_suite() {
    Outcome o;
    RandomSource rs(2026);
    const int instances = 200;
    for (bool q : {true, false}) {
        for (int t = 0; t < instances; ++t) {
            const auto T = build_tables(rs.lattice(q), 12);
            const Poly f = t == 0 ? Poly::constant(1) : rs.poly(rs.integer(0, 4));
            const Poly g = rs.poly(rs.integer(0, 4));
            const auto u = rs.functional(10);
            auto [d1, d2] = identities::dx_product(T, f, g);
            auto [s1, s2] = identities::sx_product(T, f, g);
            if (d1 != d2) o.fail("D_x product rule");
            if (s1 != s2) o.fail("S_x product rule");
            auto fu = identities::f_dx_u(T, f.degree() > 2 ? rs.poly(2) : f, u);
            if (detail::first_moment_mismatch(fu.first, fu.second)) o.fail("f D_x u");
            auto one = identities::f_dx_u(T, Poly::constant(1), u);
            if (detail::first_moment_mismatch(one.first, one.second)) o.fail("f D_x u with f = 1");
            for (long n = 0; n <= 2; ++n) {
                auto c = identities::dxn_sx(T, u, n);
                if (detail::first_moment_mismatch(c.first, c.second))
                    o.fail("D_x^n S_x commutation at n=" + std::to_string(n));
            }
        }
    }
    if (o.pass) o.note = std::to_string(instances) + " instances per lattice kind";
    return o;
}

Outcome classical_engine() {
    Outcome o;
    const long N = 30;
    const PearsonData pd(Poly{S("-1/2")}, Poly{S("0"), S("1")});
    const auto L = linear_two();
    const auto T = build_tables(L, static_cast<std::size_t>(2 * N + 3));
    const auto moments = recurrence_from_moments(pearson_moments(pd, T, static_cast<std::size_t>(2 * N + 2)),
                                                 static_cast<std::size_t>(N + 1));
    for (long n = 0; n <= N; ++n) {
        const auto c = classical_coeffs(pd, L, n);
        const auto un = static_cast<std::size_t>(n);
        const Scalar expected = -Scalar(n + 1) * (Scalar(n) - S("1/2"));
        if (c.B != Scalar(0) || c.C != expected) o.fail("closed form at n=" + std::to_string(n));
        if (moments.B[un] != c.B || moments.C[un] != c.C) o.fail("moments route at n=" + std::to_string(n));
    }
    const PearsonData qpd(Poly{S("-5/3"), S("0"), S("-9/20")}, Poly{S("0"), S("1")});
    const auto QL = q_half();
    const auto QT = build_tables(QL, 6);
    const auto qm = recurrence_from_moments(pearson_moments(qpd, QT, 4), 2);
    if (classical_coeffs(qpd, QL, 0).C != S("25/12")) o.fail("q-lattice C_1 by the closed form");
    if (qm.C[0] != S("25/12")) o.fail("q-lattice C_1 by moments");
    if (o.pass) o.note = "n <= 30 on both routes, C_1 = 25/12 on the q-lattice";
    return o;
}

Outcome q_family() {
    Outcome o;
    const auto r = cross_validate_thm1(Thm1Params{q_half(), S("3")}, 20);
    if (!r.passed()) o.fail(failed_checks(r));
    else o.note = "all routes and the characterization agree through n=20";
    return o;
}

Outcome linear_family() {
    Outcome o;
    const Thm2Params p{linear_two(), S("0"), S("1/2")};
    const auto r = cross_validate_thm2(p, 20);
    if (!r.passed()) o.fail(failed_checks(r));
    const auto T = build_tables(p.L, 8);
    const auto m = pearson_moments(thm2_pearson(p), T, 6).valid();
    const std::vector<Scalar> prefix{S("1"), S("0"), S("1/2"), S("0"), S("-1/4")};
    if (!std::equal(prefix.begin(), prefix.end(), m.begin())) o.fail("moment prefix");
    const auto mp = thm2_meixner_params(p);
    const Scalar k = thm2_kappa(p);
    for (long n = 0; n <= 20; ++n)
        if (thm2_family(p, n).C != k * k * meixner2_coeffs(mp, n).C) o.fail("Meixner map at n=" + std::to_string(n));
    if (o.pass) o.note = "all routes through n=20, moments [1, 0, 1/2, 0, -1/4], Meixner map exact";
    return o;
}

bool witness_is(const Report& r, long n, const std::string& lhs, const std::string& rhs) {
    const auto* c = r.find("forcing-witness");
    return c && c->status == Status::pass && c->witness && c->witness->n == n && c->witness->lhs == lhs &&
           c->witness->rhs == rhs;
}

Outcome witnesses() {
    Outcome o;
    if (!witness_is(nonexistence_quadratic(Lattice::quadratic(S("1"), S("1"), S("0")), S("0"), S("1")), 2, "-4", "-16"))
        o.fail("nonexistence witness");
    if (!witness_is(bzero_forcing_qlattice(q_half(), S("1")), 2, "8/17", "-5/13")) o.fail("B0 forcing witness");
    if (o.pass) o.note = "(-4, -16) and (8/17, -5/13) at n=2";
    return o;
}

long characterization_witness(const RecurrencePair& rec, const Lattice& L, long N) {
    const auto r = check_characterization(rec, build_tables(L, static_cast<std::size_t>(N + 1)), N);
    const auto* c = r.find("characterization");
    return c->status == Status::fail ? c->witness->n : -1;
}

Outcome sensitivity() {
    Outcome o;
    auto q1 = thm1_recurrence(Thm1Params{q_half(), S("3")}, 9);
    q1.C[0] += Scalar(1);
    const long w1 = characterization_witness(q1, q_half(), 8);
    if (w1 < 0 || w1 > 2) o.fail("perturbed q-lattice family");

    auto q2 = thm2_recurrence(Thm2Params{linear_two(), S("0"), S("1/2")}, 9);
    q2.C[0] += Scalar(1);
    const long w2 = characterization_witness(q2, linear_two(), 8);
    if (w2 < 0 || w2 > 2) o.fail("perturbed linear family");

    RecurrencePair m;
    const MeixnerParams mp(S("1"), S("1"));
    for (long n = 0; n <= 9; ++n) {
        m.B.push_back(meixner2_coeffs(mp, n).B);
        m.C.push_back(meixner2_coeffs(mp, n).C);
    }
    const long w3 = characterization_witness(m, linear_two(), 8);
    if (w3 < 0) o.fail("Meixner b1=1 passed");
    if (o.pass)
        o.note = "witnesses at n=" + std::to_string(w1) + ", " + std::to_string(w2) + ", Meixner b1=1 at n=" +
                 std::to_string(w3);
    return o;
}

Outcome dual_calculus() {
    Outcome o;
    for (const FamilyParams& f : {FamilyParams(Thm1Params{q_half(), S("3")}),
                                   FamilyParams(Thm2Params{linear_two(), S("0"), S("1/2")})}) {
        const auto r = functional_identity_suite(f, 10);
        for (const auto& c : r.checks)
            if (!c.moments) o.fail(r.subject + " " + c.name + " has no recorded moment range");
        if (!r.passed()) o.fail(r.subject + ": " + failed_checks(r));
    }
    if (o.pass) o.note = "both families through n=10 with recorded moment ranges";
    return o;
}

std::pair<int, std::string> run_cli(const std::string& args) {
    const std::string cmd = std::string(LATOPS_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {-1, ""};
    std::string out;
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

Outcome cli_determinism() {
    Outcome o;
    struct Example {
        std::string args;
        int code;
    };
    const std::vector<Example> examples{
        {"verify thm1 --Q 1/2 --c1 1 --c2 1 --c3 0 --a 3 --n 12 --format json", 0},
        {"verify nonexistence --beta 1 --c5 1 --c6 0 --b0 0 --format json", 0},
        {"family meixner2 --b1 0 --b2 0 --n 5", 1},
    };
    for (const auto& e : examples) {
        const auto a = run_cli(e.args);
        const auto b = run_cli(e.args);
        if (a.second != b.second || a.second.empty()) o.fail("output differs for '" + e.args + "'");
        if (a.first != e.code || b.first != e.code)
            o.fail("'" + e.args + "' exits " + std::to_string(a.first) + ", expected " + std::to_string(e.code));
    }
    if (o.pass) o.note = "byte-identical output and expected exit codes";
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"operator tables vs pointwise oracle", operators},
        {"product rules and functional identities", identity_suite},
        {"classical coefficients engine", classical_engine},
        {"q-lattice family cross-validation", q_family},
        {"linear lattice family cross-validation", linear_family},
        {"nonexistence and B0 forcing witnesses", witnesses},
        {"characterization sensitivity", sensitivity},
        {"dual calculus on both families", dual_calculus},
        {"CLI determinism and exit codes", cli_determinism},
    };
    int failed = 0;
    int k = 0;
    for (const auto& [name, fn] : criteria) {
        ++k;
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = fn();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        const auto ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
        std::cout << "criterion " << k << ": " << (o.pass ? "PASS" : "FAIL") << "  " << name << " (" << o.note
                  << ") [" << ms << " ms]\n";
        if (!o.pass) ++failed;
    }
    std::cout << (failed ? std::to_string(failed) + " of 9 criteria failed" : std::string("all 9 criteria passed"))
              << "\n";
    return failed ? 1 : 0;
}
