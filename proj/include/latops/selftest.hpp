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

#ifndef LATOPS_SELFTEST_HPP
#define LATOPS_SELFTEST_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "verify.hpp"

namespace latops {

/// Seeded generators for random lattices, parameters and functionals.
class RandomSource {
   public:
    explicit RandomSource(std::uint64_t seed) : rng_(seed) {}

    std::mt19937_64& engine() { return rng_; }

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

    Rational rational(long range = 5, long max_den = 4) {
        return make_rational(integer(-range, range), integer(1, max_den));
    }

    Rational nonzero_rational(long range = 5, long max_den = 4) {
        for (;;) {
            Rational r = rational(range, max_den);
            if (sgn(r) != 0) return r;
        }
    }

    /// Real most of the time, Gaussian otherwise.
    Scalar scalar() {
        if (integer(0, 3) == 0) return Scalar(rational(), nonzero_rational());
        return Scalar(rational());
    }

    Scalar nonzero_scalar() {
        for (;;) {
            Scalar s = scalar();
            if (!s.is_zero()) return s;
        }
    }

    Rational q_base() {
        static const char* choices[] = {"1/2", "1/3", "2/3", "2", "3/2", "3"};
        return parse_rational(choices[integer(0, 5)]);
    }

    Lattice q_lattice() { return Lattice::q_quadratic(q_base(), nonzero_scalar(), nonzero_scalar(), scalar()); }

    /// Quadratic lattice; beta = 0 (linear) in about a third of the draws.
    Lattice quadratic_lattice() {
        Scalar beta = integer(0, 2) == 0 ? Scalar(0) : nonzero_scalar();
        Scalar c5 = beta.is_zero() ? nonzero_scalar() : scalar();
        return Lattice::quadratic(beta, c5, scalar());
    }

    Lattice lattice(bool q) { return q ? q_lattice() : quadratic_lattice(); }

    Poly poly(long degree) {
        std::vector<Scalar> c;
        for (long k = 0; k <= degree; ++k) c.push_back(scalar());
        if (c.back().is_zero()) c.back() = Scalar(1);
        return Poly(std::move(c));
    }

    MomentFunctional functional(std::size_t len) {
        std::vector<Scalar> m;
        for (std::size_t k = 0; k < len; ++k) m.push_back(scalar());
        return MomentFunctional(std::move(m));
    }

    /// Admissible q-lattice family with c1 c2 != 0.
    Thm1Params thm1() {
        for (;;) {
            Thm1Params p{q_lattice(), Scalar(nonzero_rational())};
            try {
                thm1_recurrence(p, 60);
                return p;
            } catch (const regularity_error&) {
            }
        }
    }

    Thm2Params thm2() {
        for (;;) {
            Thm2Params p{Lattice::quadratic(Scalar(0), nonzero_scalar(), scalar()), scalar(), nonzero_scalar()};
            if (!thm2_vanishing_index(p)) return p;
        }
    }

   private:
    std::mt19937_64 rng_;
};

namespace detail {

/// Folds a check into the report, keeping the first failure per name and the union of ranges.
inline void merge_check(Report& into, Check c) {
    for (auto& existing : into.checks) {
        if (existing.name != c.name) continue;
        existing.lo = std::min(existing.lo, c.lo);
        existing.hi = std::max(existing.hi, c.hi);
        if (existing.status == Status::pass && c.status == Status::fail) {
            existing.status = Status::fail;
            existing.witness = c.witness;
        }
        if (c.moments) {
            if (!existing.moments)
                existing.moments = c.moments;
            else
                existing.moments->second = std::min(existing.moments->second, c.moments->second);
        }
        return;
    }
    into.checks.push_back(std::move(c));
}

inline void merge_report(Report& into, const std::string& prefix, const Report& sub) {
    if (sub.error) {
        merge_check(into, Check{prefix + "error", 0, 0, Status::fail, Witness{0, *sub.error, "", std::nullopt},
                                std::nullopt});
        return;
    }
    for (const auto& c : sub.checks) {
        Check copy = c;
        copy.name = prefix + c.name;
        merge_check(into, std::move(copy));
    }
}

inline Check poly_check(std::string name, long n, const Poly& lhs, const Poly& rhs) {
    Check c{std::move(name), n, n, Status::pass, std::nullopt, std::nullopt};
    if (lhs != rhs) {
        c.status = Status::fail;
        c.witness = Witness{n, to_string(lhs), to_string(rhs), std::nullopt};
    }
    return c;
}

inline Check scalar_check(std::string name, long n, const Scalar& lhs, const Scalar& rhs) {
    Check c{std::move(name), n, n, Status::pass, std::nullopt, std::nullopt};
    if (lhs != rhs) {
        c.status = Status::fail;
        c.witness = Witness{n, to_string(lhs), to_string(rhs), std::nullopt};
    }
    return c;
}

inline Check functional_check(std::string name, long n, const std::pair<MomentFunctional, MomentFunctional>& p) {
    return compare_functionals(std::move(name), n, n, [&](long) { return p; });
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Invariant suites

/// Table columns against the pointwise oracle at deg+1 nondegenerate nodes.
inline void suite_ddops_oracle(Report& r, RandomSource& rs, long N, int trials) {
    for (int t = 0; t < trials; ++t) {
        for (bool q : {true, false}) {
            const Lattice L = rs.lattice(q);
            const auto T = build_tables(L, static_cast<std::size_t>(N));
            for (long n = 0; n <= N; ++n) {
                const Poly zn = Poly::monomial(static_cast<std::size_t>(n), Scalar(1));
                long used = 0;
                for (long j = 1; used <= n; ++j) {
                    const Rational s = make_rational(j, 2);
                    Scalar dx_oracle;
                    try {
                        dx_oracle = pointwise_oracle(Op::dx, L, zn, s);
                    } catch (const std::domain_error&) {
                        continue;  // degenerate step
                    }
                    const Scalar x = x_eval(L, s);
                    detail::merge_check(r, detail::scalar_check("ddops.oracle-dx", n, apply(Op::dx, T, zn)(x),
                                                                dx_oracle));
                    detail::merge_check(r, detail::scalar_check("ddops.oracle-sx", n, apply(Op::sx, T, zn)(x),
                                                                pointwise_oracle(Op::sx, L, zn, s)));
                    ++used;
                }
            }
        }
    }
}

inline void suite_ddops_product_rules(Report& r, RandomSource& rs, long N, int trials) {
    for (int t = 0; t < trials; ++t) {
        for (bool q : {true, false}) {
            const auto T = build_tables(rs.lattice(q), static_cast<std::size_t>(N));
            const long df = rs.integer(0, N / 2);
            const long dg = rs.integer(0, N - df);
            const Poly f = rs.poly(df);
            const Poly g = rs.poly(dg);
            auto [d1, d2] = identities::dx_product(T, f, g);
            auto [s1, s2] = identities::sx_product(T, f, g);
            detail::merge_check(r, detail::poly_check("ddops.dx-product-rule", df + dg, d1, d2));
            detail::merge_check(r, detail::poly_check("ddops.sx-product-rule", df + dg, s1, s2));
        }
    }
}

/// Leading coefficients gamma_n, alpha_n and the subleading ones of D_x z^n, S_x z^n.
inline void suite_ddops_structure(Report& r, RandomSource& rs, long N, int trials) {
    for (int t = 0; t < trials; ++t) {
        for (bool q : {true, false}) {
            const Lattice L = rs.lattice(q);
            const auto T = build_tables(L, static_cast<std::size_t>(N));
            for (long n = 1; n <= N; ++n) {
                const auto un = static_cast<std::size_t>(n);
                const Poly& D = T.column(Op::dx, un);
                const Poly& S = T.column(Op::sx, un);
                detail::merge_check(r, detail::scalar_check("ddops.leading-dx", n, D[un - 1], L.gamma_n(n)));
                detail::merge_check(r, detail::scalar_check("ddops.leading-sx", n, S[un], L.alpha_n(n)));
                Scalar sub_d, sub_s;
                if (L.is_q()) {
                    sub_d = (Scalar(n) * L.gamma_n(n - 1) - Scalar(n - 1) * L.gamma_n(n)) * L.c3();
                    sub_s = Scalar(n) * (L.alpha_n(n - 1) - L.alpha_n(n)) * L.c3();
                } else {
                    const Scalar& beta = L.beta();
                    sub_d = beta * Scalar(n * (n - 1) * (2 * n - 1)) / Scalar(3);
                    sub_s = beta * Scalar(n * (2 * n - 1));
                }
                if (n >= 2) detail::merge_check(r, detail::scalar_check("ddops.subleading-dx", n, D[un - 2], sub_d));
                detail::merge_check(r, detail::scalar_check("ddops.subleading-sx", n, S[un - 1], sub_s));
            }
        }
    }
}

/// Product rule for f D_x u and the D_x^n S_x commutation on random functionals.
inline void suite_functionals_identities(Report& r, RandomSource& rs, long N, int trials) {
    for (int t = 0; t < trials; ++t) {
        for (bool q : {true, false}) {
            const auto len = static_cast<std::size_t>(N + 4);
            const auto T = build_tables(rs.lattice(q), len);
            const auto u = rs.functional(len);
            const long df = rs.integer(0, 2);
            detail::merge_check(r, detail::functional_check("functionals.f-dx-u", df,
                                                            identities::f_dx_u(T, rs.poly(df), u)));
            detail::merge_check(
                r, detail::functional_check("functionals.f-dx-u", 0, identities::f_dx_u(T, Poly::constant(1), u)));
            for (long n = 0; n <= 2; ++n)
                detail::merge_check(r,
                                    detail::functional_check("functionals.dxn-sx-commutation", n,
                                                             identities::dxn_sx(T, u, n)));
        }
    }
}

/// moments -> recurrence -> moments, and the Pearson relations on solved moments.
inline void suite_functionals_moments(Report& r, RandomSource& rs, long N, int trials) {
    for (int t = 0; t < trials; ++t) {
        RecurrencePair rec;
        for (long n = 0; n < N; ++n) {
            rec.B.push_back(rs.scalar());
            rec.C.push_back(rs.nonzero_scalar());
        }
        const auto u = moments_from_recurrence(rec);
        Check c{"functionals.recurrence-roundtrip", 0, N - 1, Status::pass, std::nullopt, std::nullopt};
        try {
            auto back = recurrence_from_moments(u, static_cast<std::size_t>(N));
            if (back.B != rec.B || back.C != rec.C) {
                c.status = Status::fail;
                c.witness = Witness{N, to_string(back.C.back()), to_string(rec.C.back()), std::nullopt};
            }
        } catch (const regularity_error& e) {
            c.status = Status::fail;
            c.witness = Witness{e.index(), e.what(), "regular", std::nullopt};
        }
        detail::merge_check(r, std::move(c));

        for (bool q : {true, false}) {
            const Lattice L = rs.lattice(q);
            const auto T = build_tables(L, static_cast<std::size_t>(N + 2));
            const PearsonData pd(rs.poly(rs.integer(0, 2)), Poly{rs.scalar(), rs.nonzero_scalar()});
            MomentFunctional m;
            try {
                m = pearson_moments(pd, T, static_cast<std::size_t>(N + 1));
            } catch (const regularity_error&) {
                continue;
            }
            for (long k = 0; k < N; ++k)
                detail::merge_check(r, detail::scalar_check("functionals.pearson-residual", k,
                                                            pearson_residual(pd, T, m, static_cast<std::size_t>(k)),
                                                            Scalar(0)));
        }
    }
}

inline void suite_families(Report& r, RandomSource& rs, long N, int trials) {
    for (int t = 0; t < trials; ++t) {
        const Thm1Params p1 = rs.thm1();
        const Scalar C1 = thm1_c1(p1);
        detail::merge_check(r, detail::scalar_check("families.thm1-c1-product", 0, thm1_c_closed(p1, 0), C1));
        if (auto roots = r_roots_from_c1(p1.L, C1)) {
            const Scalar q(p1.L.q_half_power(2));
            detail::merge_check(
                r, detail::scalar_check("families.r-roots-vieta", 0, roots->plus * roots->minus, -q.inverse()));
            const Scalar r0 = p1.a * p1.a;
            Check c{"families.r-roots-recover-seed", 0, 0, Status::pass, std::nullopt, std::nullopt};
            if (roots->plus != r0 && roots->minus != r0) {
                c.status = Status::fail;
                c.witness = Witness{0, to_string(roots->plus) + "," + to_string(roots->minus), to_string(r0),
                                    std::nullopt};
            }
            detail::merge_check(r, std::move(c));
        }

        const Thm2Params p2 = rs.thm2();
        const auto mp = thm2_meixner_params(p2);
        const Scalar kappa = thm2_kappa(p2);
        const auto pd2 = thm2_pearson(p2);
        const auto pd1 = thm1_pearson(p1);
        for (long n = 0; n <= N; ++n) {
            const auto f2 = thm2_family(p2, n);
            const auto m = meixner2_coeffs(mp, n);
            detail::merge_check(r, detail::scalar_check("families.thm2-meixner-B", n, f2.B - p2.B0, kappa * m.B));
            detail::merge_check(r, detail::scalar_check("families.thm2-meixner-C", n, f2.C, kappa * kappa * m.C));
            const auto c2 = classical_coeffs(pd2, p2.L, n);
            detail::merge_check(r, detail::scalar_check("families.thm2-classical-B", n, c2.B, f2.B));
            detail::merge_check(r, detail::scalar_check("families.thm2-classical-C", n, c2.C, f2.C));
            const auto f1 = thm1_family(p1, n);
            const auto c1 = classical_coeffs(pd1, p1.L, n);
            detail::merge_check(r, detail::scalar_check("families.thm1-classical-B", n, c1.B, f1.B));
            detail::merge_check(r, detail::scalar_check("families.thm1-classical-C", n, c1.C, f1.C));
        }
        detail::merge_check(r, Check{"families.thm1-regularity", 0, N,
                                     regularity_scan(pd1, p1.L, N).empty() ? Status::pass : Status::fail,
                                     std::nullopt, std::nullopt});
    }
}

inline void suite_verify(Report& r, RandomSource& rs, long N, int trials) {
    for (int t = 0; t < trials; ++t) {
        detail::merge_report(r, "verify.thm1.", cross_validate_thm1(rs.thm1(), N));
        const Thm2Params p2 = rs.thm2();
        detail::merge_report(r, "verify.thm2.", cross_validate_thm2(p2, N));

        // A perturbed C1 must break the characterization early.
        Thm2Params bumped = p2;
        bumped.C1 += Scalar(1);
        if (!thm2_vanishing_index(bumped)) {
            RecurrencePair rec = thm2_recurrence(p2, 3);
            rec.C[0] += Scalar(1);
            const auto T = build_tables(p2.L, 4);
            auto ch = check_characterization(rec, T, 2);
            detail::merge_check(r, Check{"verify.sensitivity-thm2", 0, 2,
                                         ch.passed() ? Status::fail : Status::pass, std::nullopt, std::nullopt});
        }

        Lattice quad = Lattice::quadratic(rs.nonzero_scalar(), rs.scalar(), rs.scalar());
        detail::merge_report(r, "verify.nonexistence.", nonexistence_quadratic(quad, rs.scalar(), rs.scalar(), N));

        Lattice ql = rs.q_lattice();
        Scalar B0 = rs.scalar();
        if (B0 == ql.c3()) B0 += Scalar(1);
        detail::merge_report(r, "verify.bzero.", bzero_forcing_qlattice(ql, B0, N));
        detail::merge_report(r, "verify.bzero-center.", bzero_forcing_qlattice(ql, ql.c3(), N));
    }
    const long Nid = std::min<long>(N, 6);
    detail::merge_report(r, "verify.identities-thm2.", functional_identity_suite(rs.thm2(), Nid));
    detail::merge_report(r, "verify.identities-thm1.", functional_identity_suite(rs.thm1(), Nid));
}

/// Every invariant suite with N as the degree bound.
inline Report selftest(long N, std::uint64_t seed, int trials = 2) {
    Report r;
    r.subject = "selftest";
    r.values["n"] = std::to_string(N);
    r.values["seed"] = std::to_string(seed);
    RandomSource rs(seed);
    suite_ddops_oracle(r, rs, N, trials);
    suite_ddops_product_rules(r, rs, N, trials);
    suite_ddops_structure(r, rs, N, trials);
    suite_functionals_identities(r, rs, N, trials);
    suite_functionals_moments(r, rs, N, trials);
    suite_families(r, rs, N, trials);
    suite_verify(r, rs, N, trials);
    r.finalize();
    return r;
}

}  // namespace latops

#endif
