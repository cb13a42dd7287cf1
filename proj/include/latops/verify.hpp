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

#ifndef LATOPS_VERIFY_HPP
#define LATOPS_VERIFY_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "families.hpp"

namespace latops {

// ---------------------------------------------------------------------------
// Reports

struct Witness {
    long n;
    std::string lhs;
    std::string rhs;
    std::optional<long> moment;  // index of the first differing moment, for functional identities

    friend bool operator==(const Witness&, const Witness&) = default;
};

enum class Status { pass, fail };

inline const char* to_string(Status s) { return s == Status::pass ? "pass" : "fail"; }

struct Check {
    std::string name;
    long lo = 0;
    long hi = 0;
    Status status = Status::pass;
    std::optional<Witness> witness;
    /// Moment range the comparison actually covered, for truncated functionals.
    std::optional<std::pair<long, long>> moments;
};

/// Outcome of a verification run. Every pass/fail is an exact equality.
struct Report {
    std::string subject;
    std::vector<Check> checks;
    std::map<std::string, std::string> values;
    std::optional<std::string> error;

    bool passed() const {
        if (error) return false;
        return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.status == Status::pass; });
    }

    const Check* find(const std::string& name) const {
        for (const auto& c : checks)
            if (c.name == name) return &c;
        return nullptr;
    }

    /// Deterministic order: by name, then by index range.
    void finalize() {
        std::stable_sort(checks.begin(), checks.end(), [](const Check& a, const Check& b) {
            if (a.name != b.name) return a.name < b.name;
            return a.lo < b.lo;
        });
    }
};

namespace detail {

/// Compares lhs(n) and rhs(n) for lo <= n <= hi; the first mismatch becomes the witness.
template <class L, class R>
Check compare_scalars(std::string name, long lo, long hi, L&& lhs, R&& rhs) {
    Check c{std::move(name), lo, hi, Status::pass, std::nullopt, std::nullopt};
    for (long n = lo; n <= hi; ++n) {
        Scalar a = lhs(n);
        Scalar b = rhs(n);
        if (a != b) {
            c.status = Status::fail;
            c.witness = Witness{n, to_string(a), to_string(b), std::nullopt};
            break;
        }
    }
    return c;
}

/// First index where two truncated functionals differ on their common valid prefix.
/// An empty common prefix counts as a mismatch at index 0.
inline std::optional<long> first_moment_mismatch(const MomentFunctional& a, const MomentFunctional& b) {
    std::size_t len = std::min(a.valid_len, b.valid_len);
    if (len == 0) return 0;
    for (std::size_t k = 0; k < len; ++k)
        if (a.moments[k] != b.moments[k]) return static_cast<long>(k);
    return std::nullopt;
}

/// Compares functional pairs for lo <= n <= hi and records the narrowest common moment range.
inline Check compare_functionals(std::string name, long lo, long hi,
                                 const std::function<std::pair<MomentFunctional, MomentFunctional>(long)>& pair_at) {
    Check c{std::move(name), lo, hi, Status::pass, std::nullopt, std::nullopt};
    long common = -1;
    for (long n = lo; n <= hi; ++n) {
        auto [a, b] = pair_at(n);
        long len = static_cast<long>(std::min(a.valid_len, b.valid_len));
        common = common < 0 ? len : std::min(common, len);
        if (auto k = first_moment_mismatch(a, b)) {
            c.status = Status::fail;
            auto show = [&](const MomentFunctional& f) {
                return static_cast<std::size_t>(*k) < f.valid_len ? to_string(f.moments[static_cast<std::size_t>(*k)])
                                                                  : std::string("<empty>");
            };
            c.witness = Witness{n, show(a), show(b), *k};
            break;
        }
    }
    if (common > 0) c.moments = std::make_pair(0L, common - 1);
    return c;
}

inline Check regularity_check(const PearsonData& pd, const Lattice& L, long N) {
    Check c{"regularity-scan", 0, N, Status::pass, std::nullopt, std::nullopt};
    auto v = regularity_scan(pd, L, N);
    if (!v.empty()) {
        c.status = Status::fail;
        c.witness = Witness{v.front().n, v.front().kind == "d" ? "d_n=0" : "phi^[n](node)=0", "nonzero",
                            std::nullopt};
    }
    return c;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Characterization equation

/// Checks D_x P_{n+1} = (gamma_{n+1}/alpha_n) S_x P_n for 0 <= n <= N, where P
/// comes from the recurrence (needs B_0..B_N, C_1..C_N and tables to degree N+1).
inline Report check_characterization(const RecurrencePair& rec, const OperatorTables& T, long N) {
    Report r;
    r.subject = "characterization";
    r.checks.push_back(
        [&] {
            Check c{"characterization", 0, N, Status::pass, std::nullopt, std::nullopt};
            const Lattice& L = T.lattice();
            auto P = ttrr_build(rec, static_cast<std::size_t>(N + 1));
            for (long n = 0; n <= N; ++n) {
                Poly lhs = apply(Op::dx, T, P[static_cast<std::size_t>(n + 1)]);
                Poly rhs = (L.gamma_n(n + 1) / L.alpha_n(n)) * apply(Op::sx, T, P[static_cast<std::size_t>(n)]);
                if (lhs != rhs) {
                    c.status = Status::fail;
                    c.witness = Witness{n, to_string(lhs), to_string(rhs), std::nullopt};
                    break;
                }
            }
            return c;
        }());
    r.finalize();
    return r;
}

// ---------------------------------------------------------------------------
// B_n forced by the characterization

/// B_0..B_N forced by D_x P_{n+1} = (gamma_{n+1}/alpha_n) S_x P_n through the
/// subleading coefficients: with P_n = z^n + f_n z^{n-1} + ...,
///   u_{n+1} + gamma_n f_{n+1} = (gamma_{n+1}/alpha_n)(uhat_n + alpha_{n-1} f_n),
/// f_1 = -B0 and B_n = f_n - f_{n+1}. Needs tables to degree N+1.
inline std::vector<Scalar> telescopic_b(const OperatorTables& T, const Scalar& B0, long N) {
    const Lattice& L = T.lattice();
    std::vector<Scalar> f{Scalar(0), -B0};
    for (long n = 1; n <= N; ++n) {
        auto un = static_cast<std::size_t>(n);
        const Scalar u_next = T.column(Op::dx, un + 1)[un - 1];
        const Scalar uhat = T.column(Op::sx, un)[un - 1];
        Scalar rhs = L.gamma_n(n + 1) / L.alpha_n(n) * (uhat + L.alpha_n(n - 1) * f[un]);
        f.push_back((rhs - u_next) / L.gamma_n(n));
    }
    std::vector<Scalar> B;
    for (long n = 0; n <= N; ++n) B.push_back(f[static_cast<std::size_t>(n)] - f[static_cast<std::size_t>(n + 1)]);
    return B;
}

/// Closed forms of the telescoped B_n: c3 + alpha/(alpha_{n-1} alpha_n)(B0 - c3) on
/// q-lattices, B0 - 2 beta n(n-1) on quadratic lattices.
inline Scalar telescopic_b_closed(const Lattice& L, const Scalar& B0, long n) {
    if (L.is_q()) return L.c3() + L.alpha() / (L.alpha_n(n - 1) * L.alpha_n(n)) * (B0 - L.c3());
    return B0 - Scalar(2) * L.beta() * Scalar(n * (n - 1));
}

/// Closed forms of B_n obtained from the Pearson data psi = z - B0 and the
/// corresponding phi; B_n does not depend on C_1.
inline Scalar pearson_b_closed(const Lattice& L, const Scalar& B0, long n) {
    if (L.is_q()) {
        auto q = [&](long k) { return Scalar(L.q_half_power(2 * k)); };
        const Scalar one(1);
        const Scalar q1 = q(1);
        return L.c3() + (one + q1) * (B0 - L.c3()) * q(n - 2) *
                            ((q1 - one) * (one - q(2 * n - 2)) + (one + q1) * q(n - 1)) /
                            ((one + q(2 * n - 3)) * (one + q(2 * n - 1)));
    }
    return B0 - Scalar(8) * L.beta() * Scalar(n * (n - 1));
}

/// Pearson data forced by the characterization at n = 0 for a given B0, C1.
inline PearsonData characterization_pearson(const Lattice& L, const Scalar& B0, const Scalar& C1) {
    const Poly psi{-B0, 1};
    if (L.is_q()) {
        const Scalar alpha = L.alpha();
        const Poly w{-L.c3(), 1};
        Poly phi = -(alpha - alpha.inverse()) * (w * psi) - Poly::constant(C1 / alpha);
        return PearsonData(std::move(phi), psi);
    }
    Poly phi = Scalar(-2) * L.beta() * psi - Poly::constant(C1);
    return PearsonData(std::move(phi), psi);
}

namespace detail {

inline Report forcing_report(std::string subject, const Lattice& L, const Scalar& B0, const Scalar& C1, long N,
                             bool expect_agreement) {
    Report r;
    r.subject = std::move(subject);
    const auto T = build_tables(L, static_cast<std::size_t>(N + 1));
    const auto tele = telescopic_b(T, B0, N);
    const auto pd = characterization_pearson(L, B0, C1);

    r.checks.push_back(compare_scalars(
        "B.telescopic-closed-vs-recursion", 0, N, [&](long n) { return telescopic_b_closed(L, B0, n); },
        [&](long n) { return tele[static_cast<std::size_t>(n)]; }));
    r.checks.push_back(compare_scalars(
        "B.pearson-closed-vs-classical", 0, N, [&](long n) { return pearson_b_closed(L, B0, n); },
        [&](long n) { return classical_coeffs(pd, L, n).B; }));

    auto agreement = compare_scalars(
        "B.telescopic-vs-pearson", 0, N, [&](long n) { return telescopic_b_closed(L, B0, n); },
        [&](long n) { return pearson_b_closed(L, B0, n); });
    if (expect_agreement) {
        r.checks.push_back(std::move(agreement));
    } else {
        // The two routes must disagree somewhere; the first disagreement is the witness.
        Check w{"forcing-witness", 0, N, Status::pass, agreement.witness, std::nullopt};
        if (agreement.status == Status::pass) {
            w.status = Status::fail;
            Scalar v = telescopic_b_closed(L, B0, N);
            w.witness = Witness{N, to_string(v), to_string(v), std::nullopt};
        } else {
            r.values["first_mismatch"] = std::to_string(agreement.witness->n);
        }
        r.checks.push_back(std::move(w));
    }
    r.values["B0"] = to_string(B0);
    r.finalize();
    return r;
}

}  // namespace detail

/// On x(s) = 4 beta s^2 + c5 s + c6 with beta != 0 the B_n forced by the
/// characterization (B0 - 2 beta n(n-1)) and by its Pearson equation
/// (B0 - 8 beta n(n-1)) differ from n = 2 on, so no solution exists.
inline Report nonexistence_quadratic(const Lattice& L, const Scalar& B0, const Scalar& C1, long N = 10) {
    if (L.is_q()) throw std::invalid_argument("nonexistence check needs a quadratic lattice");
    if (L.beta().is_zero()) throw std::invalid_argument("beta = 0 admits solutions; use cross_validate_thm2");
    return detail::forcing_report("nonexistence", L, B0, C1, N, false);
}

/// On q-lattices the two B_n expressions agree only when B0 = c3. For B0 != c3
/// the first index where they differ is reported (a finite stand-in for the
/// limit argument).
inline Report bzero_forcing_qlattice(const Lattice& L, const Scalar& B0, long N = 10) {
    if (!L.is_q()) throw std::invalid_argument("B0 forcing check needs a q-quadratic lattice");
    return detail::forcing_report("bzero", L, B0, Scalar(1), N, B0 == L.c3());
}

// ---------------------------------------------------------------------------
// Four-way cross-validation of the solution families

/// Routes for thm1: (i) closed forms, (ii) classical_coeffs on the Pearson data,
/// (iii) Gram-Schmidt on the Pearson moments, (iv) the Askey-Wilson quadruple
/// (a, -a, i/(aQ), -i/(aQ)) under z -> (z - c3)/(2 sqrt(c1 c2)), which needs
/// B^AW = 0 and C = 4 c1 c2 C^AW. Also runs the characterization on route (i).
inline Report cross_validate_thm1(const Thm1Params& p, long N) {
    Report r;
    r.subject = "thm1";
    r.values["a"] = to_string(p.a);
    RecurrencePair closed;
    try {
        closed = thm1_recurrence(p, N + 1);
        r.values["C1"] = to_string(thm1_c1(p));
        r.values["r"] = to_string(p.a * p.a);
    } catch (const regularity_error& e) {
        r.error = e.what();
        try {
            r.checks.push_back(detail::regularity_check(thm1_pearson(p), p.L, N));
        } catch (const std::exception&) {
        }
        r.finalize();
        return r;
    } catch (const std::invalid_argument& e) {
        r.error = e.what();
        return r;
    }
    const Lattice& L = p.L;
    const auto pd = thm1_pearson(p);
    const auto T = build_tables(L, static_cast<std::size_t>(2 * N + 3));
    const auto classical = classical_recurrence(pd, L, N);
    const auto moments = recurrence_from_moments(pearson_moments(pd, T, static_cast<std::size_t>(2 * N + 2)),
                                                 static_cast<std::size_t>(N + 1));
    const Rational& Q = L.q_params().Q;
    const AWParams aw{p.a, -p.a, Scalar::i() / (p.a * Scalar(Q)), -Scalar::i() / (p.a * Scalar(Q)), Q};
    const auto& lp = L.q_params();
    const Scalar scale = Scalar(4) * lp.c1 * lp.c2;
    auto at = [](const std::vector<Scalar>& v, long n) { return v[static_cast<std::size_t>(n)]; };

    r.checks.push_back(detail::compare_scalars(
        "B.closed-vs-classical", 0, N, [&](long n) { return at(closed.B, n); },
        [&](long n) { return at(classical.B, n); }));
    r.checks.push_back(detail::compare_scalars(
        "B.closed-vs-moments", 0, N, [&](long n) { return at(closed.B, n); },
        [&](long n) { return at(moments.B, n); }));
    r.checks.push_back(detail::compare_scalars(
        "B.aw-quadruple-vanishes", 0, N, [&](long n) { return aw_coeffs(aw, n).B; },
        [&](long) { return Scalar(0); }));
    r.checks.push_back(detail::compare_scalars(
        "B.closed-is-c3", 0, N, [&](long n) { return at(closed.B, n); }, [&](long) { return L.c3(); }));
    r.checks.push_back(detail::compare_scalars(
        "C.closed-vs-classical", 0, N, [&](long n) { return at(closed.C, n); },
        [&](long n) { return at(classical.C, n); }));
    r.checks.push_back(detail::compare_scalars(
        "C.closed-vs-moments", 0, N, [&](long n) { return at(closed.C, n); },
        [&](long n) { return at(moments.C, n); }));
    r.checks.push_back(detail::compare_scalars(
        "C.closed-vs-aw-scaled", 0, N, [&](long n) { return at(closed.C, n); },
        [&](long n) { return scale * aw_coeffs(aw, n).C; }));
    r.checks.push_back(detail::compare_scalars(
        "C1.r-formula-vs-product", 0, 0, [&](long) { return thm1_c1(p); }, [&](long) { return at(closed.C, 0); }));
    r.checks.push_back(detail::regularity_check(pd, L, N));

    auto ch = check_characterization(closed, T, N);
    r.checks.push_back(ch.checks.front());
    r.finalize();
    return r;
}

/// Routes for thm2 as for thm1, with (iv) the Meixner-II map
/// P_n(z) = kappa^n M_n((z - B0)/kappa; 0, -4 C1/c5^2), kappa = i c5/2:
/// B_n = B0 + kappa B^M_n and C_{n+1} = kappa^2 C^M_{n+1}.
inline Report cross_validate_thm2(const Thm2Params& p, long N) {
    Report r;
    r.subject = "thm2";
    r.values["B0"] = to_string(p.B0);
    r.values["C1"] = to_string(p.C1);
    RecurrencePair closed;
    try {
        closed = thm2_recurrence(p, N + 1);
        r.values["b2"] = to_string(thm2_meixner_params(p).b2);
    } catch (const regularity_error& e) {
        r.error = e.what();
        r.checks.push_back(detail::regularity_check(thm2_pearson(p), p.L, N));
        r.finalize();
        return r;
    } catch (const std::invalid_argument& e) {
        r.error = e.what();
        return r;
    }
    const Lattice& L = p.L;
    const auto pd = thm2_pearson(p);
    const auto T = build_tables(L, static_cast<std::size_t>(2 * N + 3));
    const auto classical = classical_recurrence(pd, L, N);
    const auto moments = recurrence_from_moments(pearson_moments(pd, T, static_cast<std::size_t>(2 * N + 2)),
                                                 static_cast<std::size_t>(N + 1));
    const auto mp = thm2_meixner_params(p);
    const Scalar kappa = thm2_kappa(p);
    auto at = [](const std::vector<Scalar>& v, long n) { return v[static_cast<std::size_t>(n)]; };

    r.checks.push_back(detail::compare_scalars(
        "B.closed-vs-classical", 0, N, [&](long n) { return at(closed.B, n); },
        [&](long n) { return at(classical.B, n); }));
    r.checks.push_back(detail::compare_scalars(
        "B.closed-vs-moments", 0, N, [&](long n) { return at(closed.B, n); },
        [&](long n) { return at(moments.B, n); }));
    r.checks.push_back(detail::compare_scalars(
        "B.closed-vs-meixner-affine", 0, N, [&](long n) { return at(closed.B, n); },
        [&](long n) { return p.B0 + kappa * meixner2_coeffs(mp, n).B; }));
    r.checks.push_back(detail::compare_scalars(
        "C.closed-vs-classical", 0, N, [&](long n) { return at(closed.C, n); },
        [&](long n) { return at(classical.C, n); }));
    r.checks.push_back(detail::compare_scalars(
        "C.closed-vs-moments", 0, N, [&](long n) { return at(closed.C, n); },
        [&](long n) { return at(moments.C, n); }));
    r.checks.push_back(detail::compare_scalars(
        "C.closed-vs-meixner-affine", 0, N, [&](long n) { return at(closed.C, n); },
        [&](long n) { return kappa * kappa * meixner2_coeffs(mp, n).C; }));
    r.checks.push_back(detail::regularity_check(pd, L, N));

    auto ch = check_characterization(closed, T, N);
    r.checks.push_back(ch.checks.front());
    r.finalize();
    return r;
}

// ---------------------------------------------------------------------------
// Identities on polynomials and truncated functionals

namespace identities {

/// D_x(fg) and (D_x f)(S_x g) + (S_x f)(D_x g).
inline std::pair<Poly, Poly> dx_product(const OperatorTables& T, const Poly& f, const Poly& g) {
    return {apply(Op::dx, T, f * g),
            apply(Op::dx, T, f) * apply(Op::sx, T, g) + apply(Op::sx, T, f) * apply(Op::dx, T, g)};
}

/// S_x(fg) and (D_x f)(D_x g) U2 + (S_x f)(S_x g).
inline std::pair<Poly, Poly> sx_product(const OperatorTables& T, const Poly& f, const Poly& g) {
    const Poly U2 = structural_polys(T.lattice()).U2;
    return {apply(Op::sx, T, f * g),
            apply(Op::dx, T, f) * apply(Op::dx, T, g) * U2 + apply(Op::sx, T, f) * apply(Op::sx, T, g)};
}

/// f D_x u and D_x(S_x f u) - S_x(D_x f u).
inline std::pair<MomentFunctional, MomentFunctional> f_dx_u(const OperatorTables& T, const Poly& f,
                                                             const MomentFunctional& u) {
    auto lhs = left_multiply(f, transform(Op::dx, T, u));
    auto rhs = subtract(transform(Op::dx, T, left_multiply(apply(Op::sx, T, f), u)),
                        transform(Op::sx, T, left_multiply(apply(Op::dx, T, f), u)));
    return {lhs, rhs};
}

/// alpha D_x^n S_x u and alpha_{n+1} S_x D_x^n u + gamma_n U1 D_x^{n+1} u.
inline std::pair<MomentFunctional, MomentFunctional> dxn_sx(const OperatorTables& T, const MomentFunctional& u,
                                                            long n) {
    const Lattice& L = T.lattice();
    const Poly U1 = structural_polys(L).U1;
    auto un = static_cast<std::size_t>(n);
    auto lhs = scale(L.alpha(), transform_power(Op::dx, T, transform(Op::sx, T, u), un));
    auto rhs = add(scale(L.alpha_n(n + 1), transform(Op::sx, T, transform_power(Op::dx, T, u, un))),
                   scale(L.gamma_n(n), left_multiply(U1, transform_power(Op::dx, T, u, un + 1))));
    return {lhs, rhs};
}

}  // namespace identities

// ---------------------------------------------------------------------------
// Functional identities on the solution families

using FamilyParams = std::variant<Thm1Params, Thm2Params>;

/// Random polynomial with small rational coefficients; used by the identity suites.
inline Poly random_poly(std::mt19937_64& rng, long degree) {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 5);
    std::vector<Scalar> c;
    for (long k = 0; k <= degree; ++k) c.emplace_back(make_rational(num(rng), den(rng)));
    if (c.back().is_zero()) c.back() = Scalar(1);
    return Poly(std::move(c));
}

/// On the family's functional u (truncated to 2N+2 plus the shrinkage of each
/// operation) checks, for 0 <= n <= N:
///   S_x a^{[1]}_n = alpha_n a_n,
///   D_x((gamma_{n+1} U1 P_{n+1} + alpha_n C_{n+1} P_n) u) = -alpha gamma_{n+1} S_x(P_{n+1} u),
///   D_x^k a^{[k]}_n = (-1)^k (gamma_{n+k}!/gamma_n!) a_{n+k} for k = 1, 2,
/// and the product rule for f D_x u and the D_x^n S_x commutation (n <= 2).
inline Report functional_identity_suite(const FamilyParams& family, long N, std::uint64_t seed = 1) {
    Report r;
    const bool is_thm1 = std::holds_alternative<Thm1Params>(family);
    r.subject = is_thm1 ? "identities-thm1" : "identities-thm2";

    const long M = 2 * N + 2;          // dual-basis depth
    const long depth = M + 2;          // P_0..P_{M+2} feed P^{[2]} up to degree M
    const long ulen = M + N + 4;       // room for the degree n+2 multiplier
    const Lattice& L = is_thm1 ? std::get<Thm1Params>(family).L : std::get<Thm2Params>(family).L;

    RecurrencePair rec;
    std::optional<PearsonData> pd;
    try {
        if (is_thm1) {
            const auto& p = std::get<Thm1Params>(family);
            rec = thm1_recurrence(p, depth);
            pd = thm1_pearson(p);
        } else {
            const auto& p = std::get<Thm2Params>(family);
            rec = thm2_recurrence(p, depth);
            pd = thm2_pearson(p);
        }
    } catch (const std::exception& e) {
        r.error = e.what();
        return r;
    }

    const auto T = build_tables(L, static_cast<std::size_t>(std::max(depth, ulen)));
    const auto P = ttrr_build(rec, static_cast<std::size_t>(depth));
    const auto u = pearson_moments(*pd, T, static_cast<std::size_t>(ulen - 1));
    const auto U1 = structural_polys(L).U1;
    const auto uM = static_cast<std::size_t>(M);
    r.values["dual_depth"] = std::to_string(M);
    r.values["moments"] = std::to_string(ulen);

    auto derived1 = derived_sequence(T, P, 1);
    auto derived2 = derived_sequence(T, P, 2);
    auto a = [&](long n) { return dual_basis(P, static_cast<std::size_t>(n), uM); };

    r.checks.push_back(detail::compare_functionals("dual.sx-derived-basis", 0, N, [&](long n) {
        auto lhs = transform(Op::sx, T, dual_basis(derived1, static_cast<std::size_t>(n), uM));
        return std::make_pair(lhs, scale(L.alpha_n(n), a(n)));
    }));

    r.checks.push_back(detail::compare_functionals("dual.pearson-at-n", 0, N, [&](long n) {
        auto un = static_cast<std::size_t>(n);
        Poly f = L.gamma_n(n + 1) * (U1 * P[un + 1]) + (L.alpha_n(n) * rec.c(un + 1)) * P[un];
        auto lhs = transform(Op::dx, T, left_multiply(f, u));
        auto rhs = scale(-L.alpha() * L.gamma_n(n + 1), transform(Op::sx, T, left_multiply(P[un + 1], u)));
        return std::make_pair(lhs, rhs);
    }));

    for (long k = 1; k <= 2; ++k) {
        const auto& derived = k == 1 ? derived1 : derived2;
        r.checks.push_back(
            detail::compare_functionals("dual.dx-derived-basis-k" + std::to_string(k), 0, N, [&, k](long n) {
                auto lhs = transform_power(Op::dx, T, dual_basis(derived, static_cast<std::size_t>(n), uM),
                                           static_cast<std::size_t>(k));
                Scalar factor = gamma_factorial(L, n + k) / gamma_factorial(L, n);
                if (k % 2) factor = -factor;
                return std::make_pair(lhs, scale(factor, a(n + k)));
            }));
    }

    std::mt19937_64 rng(seed);
    std::vector<Poly> fs{Poly::constant(1)};
    for (int j = 0; j < 4; ++j) fs.push_back(random_poly(rng, j % 3));
    r.checks.push_back(detail::compare_functionals("functional.f-dx-u", 0, static_cast<long>(fs.size()) - 1,
                                                   [&](long j) {
                                                       return identities::f_dx_u(T, fs[static_cast<std::size_t>(j)],
                                                                                 u);
                                                   }));
    r.checks.push_back(detail::compare_functionals("functional.dxn-sx-commutation", 0, 2,
                                                   [&](long n) { return identities::dxn_sx(T, u, n); }));
    r.finalize();
    return r;
}

}  // namespace latops

#endif
