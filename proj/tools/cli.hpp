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

#ifndef LATOPS_TOOLS_CLI_HPP
#define LATOPS_TOOLS_CLI_HPP

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <latops/io.hpp>
#include <latops/selftest.hpp>

namespace latops::cli {

enum Exit { ok = 0, failure = 1, usage = 2 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Emitters

struct Table {
    std::vector<std::string> preamble;  // table format only
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

inline std::string render_table(const Table& t) {
    std::vector<std::size_t> width(t.header.size());
    for (std::size_t c = 0; c < t.header.size(); ++c) width[c] = t.header[c].size();
    for (const auto& row : t.rows)
        for (std::size_t c = 0; c < row.size() && c < width.size(); ++c) width[c] = std::max(width[c], row[c].size());
    std::ostringstream os;
    for (const auto& line : t.preamble) os << line << '\n';
    auto emit = [&](const std::vector<std::string>& row) {
        std::string line;
        for (std::size_t c = 0; c < width.size(); ++c) {
            std::string cell = c < row.size() ? row[c] : "";
            if (c + 1 < width.size()) cell.resize(width[c], ' ');
            line += cell;
            if (c + 1 < width.size()) line += "  ";
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        os << line << '\n';
    };
    emit(t.header);
    std::vector<std::string> rule;
    for (auto w : width) rule.emplace_back(w, '-');
    emit(rule);
    for (const auto& row : t.rows) emit(row);
    return os.str();
}

inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

inline std::string render_csv(const Table& t) {
    std::ostringstream os;
    auto emit = [&](const std::vector<std::string>& row) {
        for (std::size_t c = 0; c < row.size(); ++c) os << (c ? "," : "") << csv_field(row[c]);
        os << '\n';
    };
    emit(t.header);
    for (const auto& row : t.rows) emit(row);
    return os.str();
}

struct Result {
    json doc;
    Table table;
    int code = ok;
};

// ---------------------------------------------------------------------------
// Flag handling

inline long max_degree() {
    const char* env = std::getenv("LATOPS_MAX_DEGREE");
    if (!env || !*env) return 100;
    std::string s(env);
    if (!detail::is_digits(s) || s.size() > 9) throw UsageError("LATOPS_MAX_DEGREE must be a nonnegative integer");
    return std::stol(s);
}

inline long checked_degree(long n, const std::string& flag = "--n") {
    if (n < 0) throw UsageError(flag + " must be nonnegative");
    const long cap = max_degree();
    if (n > cap) throw UsageError(flag + " = " + std::to_string(n) + " exceeds LATOPS_MAX_DEGREE = " + std::to_string(cap));
    return n;
}

inline Scalar scalar_flag(const std::string& name, const std::string& text) {
    try {
        return parse_scalar(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(name + ": " + e.what());
    }
}

inline Rational rational_flag(const std::string& name, const std::string& text) {
    try {
        return parse_rational(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(name + ": " + e.what());
    }
}

/// "c0,c1,..." in the given order.
inline std::vector<Scalar> scalar_list(const std::string& name, const std::string& text) {
    std::vector<Scalar> out;
    std::string cell;
    std::istringstream is(text);
    while (std::getline(is, cell, ',')) out.push_back(scalar_flag(name, cell));
    if (out.empty() || (!text.empty() && text.back() == ',')) throw UsageError(name + ": empty coefficient list");
    return out;
}

struct LatticeFlags {
    std::string Q, c1 = "1", c2 = "1", c3 = "0", beta = "0", c5 = "0", c6 = "0";
    CLI::Option *oQ = nullptr, *oc1 = nullptr, *oc2 = nullptr, *oc3 = nullptr;
    CLI::Option *obeta = nullptr, *oc5 = nullptr, *oc6 = nullptr;

    void add_q(CLI::App* app) {
        oQ = app->add_option("--Q", Q, "q^{1/2}, a positive rational != 1");
        oc1 = app->add_option("--c1", c1, "x(s) = c1 q^-s + c2 q^s + c3")->capture_default_str();
        oc2 = app->add_option("--c2", c2)->capture_default_str();
        oc3 = app->add_option("--c3", c3)->capture_default_str();
    }

    void add_quadratic(CLI::App* app) {
        obeta = app->add_option("--beta", beta, "x(s) = 4 beta s^2 + c5 s + c6")->capture_default_str();
        oc5 = app->add_option("--c5", c5)->capture_default_str();
        oc6 = app->add_option("--c6", c6)->capture_default_str();
    }

    void add_both(CLI::App* app) {
        add_q(app);
        add_quadratic(app);
    }

    bool any_q() const { return (oQ && oQ->count()) || (oc1 && oc1->count()) || (oc2 && oc2->count()) || (oc3 && oc3->count()); }
    bool any_quadratic() const {
        return (obeta && obeta->count()) || (oc5 && oc5->count()) || (oc6 && oc6->count());
    }

    /// q-lattice when --Q is given, quadratic when any of --beta/--c5/--c6 is.
    Lattice lattice() const {
        const bool q = oQ && oQ->count();
        if (q && any_quadratic()) throw UsageError("--Q cannot be combined with --beta/--c5/--c6");
        if (!q && any_q()) throw UsageError("--c1/--c2/--c3 need --Q");
        if (q) return q_lattice();
        if (!any_quadratic()) throw UsageError("a lattice is required: --Q ... or --beta/--c5/--c6");
        return quadratic_lattice();
    }

    Lattice q_lattice() const {
        if (!oQ || !oQ->count()) throw UsageError("--Q is required");
        auto Qv = rational_flag("--Q", Q);
        auto a = scalar_flag("--c1", c1), b = scalar_flag("--c2", c2), c = scalar_flag("--c3", c3);
        return Lattice::q_quadratic(Qv, a, b, c);
    }

    Lattice quadratic_lattice() const {
        auto b = scalar_flag("--beta", beta), c = scalar_flag("--c5", c5), d = scalar_flag("--c6", c6);
        return Lattice::quadratic(b, c, d);
    }
};

inline std::vector<std::string> scalar_row(long n, std::initializer_list<Scalar> values, bool approx) {
    std::vector<std::string> row{std::to_string(n)};
    for (const auto& v : values) row.push_back(to_string(v));
    if (approx)
        for (const auto& v : values) row.push_back(to_approx_string(v));
    return row;
}

inline std::vector<std::string> header_with_approx(std::vector<std::string> header, bool approx) {
    if (!approx) return header;
    const std::size_t k = header.size();
    for (std::size_t c = 1; c < k; ++c) header.push_back(header[c] + "~");
    return header;
}

inline std::string describe(const Lattice& L) {
    if (L.is_q()) {
        const auto& p = L.q_params();
        return "lattice: q  Q=" + to_string(p.Q) + "  c1=" + to_string(p.c1) + "  c2=" + to_string(p.c2) +
               "  c3=" + to_string(p.c3);
    }
    const auto& p = L.quadratic_params();
    return "lattice: quadratic  beta=" + to_string(p.beta) + "  c5=" + to_string(p.c5) + "  c6=" + to_string(p.c6);
}

/// Coefficient table n, B_n, C_{n+1}.
inline Table recurrence_table(const RecurrencePair& rec, bool approx) {
    Table t;
    t.header = header_with_approx({"n", "B_n", "C_{n+1}"}, approx);
    for (std::size_t n = 0; n < rec.B.size(); ++n)
        t.rows.push_back(scalar_row(static_cast<long>(n), {rec.B[n], rec.C.at(n)}, approx));
    return t;
}

inline Table report_table(const Report& r) {
    Table t;
    t.preamble.push_back("subject: " + r.subject);
    for (const auto& [k, v] : r.values) t.preamble.push_back(k + ": " + v);
    if (r.error) t.preamble.push_back("error: " + *r.error);
    t.header = {"check", "range", "status", "witness"};
    for (const auto& c : r.checks) {
        std::string range = "[" + std::to_string(c.lo) + "," + std::to_string(c.hi) + "]";
        if (c.moments) range += " m[" + std::to_string(c.moments->first) + "," + std::to_string(c.moments->second) + "]";
        std::string w;
        if (c.witness) {
            w = "n=" + std::to_string(c.witness->n);
            if (c.witness->moment) w += " k=" + std::to_string(*c.witness->moment);
            w += " lhs=" + c.witness->lhs + " rhs=" + c.witness->rhs;
        }
        t.rows.push_back({c.name, range, to_string(c.status), w});
    }
    t.preamble.push_back(std::string("status: ") + (r.passed() ? "pass" : "fail"));
    return t;
}

inline Result report_result(const Report& r, json params) {
    Result res;
    res.doc = to_json(r);
    res.doc["params"] = std::move(params);
    res.table = report_table(r);
    res.code = r.passed() ? ok : failure;
    return res;
}

// ---------------------------------------------------------------------------
// Commands

inline Result cmd_lattice_info(const Lattice& L, long N, bool approx) {
    Result res;
    const auto U = structural_polys(L);
    json seq = json::array();
    res.table.preamble = {describe(L), "alpha: " + to_string(L.alpha()), "beta: " + to_string(L.beta()),
                          "U1: " + to_string(U.U1), "U2: " + to_string(U.U2)};
    res.table.header = header_with_approx({"n", "alpha_n", "beta_n", "gamma_n"}, approx);
    for (long n = 0; n <= N; ++n) {
        const auto s = lattice_seq(L, n);
        seq.push_back({{"n", n}, {"alpha_n", to_string(s.alpha_n)}, {"beta_n", to_string(s.beta_n)},
                       {"gamma_n", to_string(s.gamma_n)}});
        res.table.rows.push_back(scalar_row(n, {s.alpha_n, s.beta_n, s.gamma_n}, approx));
    }
    res.doc = {{"lattice", to_json(L)},  {"alpha", to_string(L.alpha())}, {"beta", to_string(L.beta())},
               {"U1", to_json(U.U1)},    {"U2", to_json(U.U2)},           {"sequences", seq}};
    return res;
}

inline Result cmd_op_apply(const Lattice& L, Op op, const Poly& p, long power, bool approx) {
    const auto T = build_tables(L, static_cast<std::size_t>(std::max(0L, p.degree())));
    const Poly out = apply_power(op, T, p, static_cast<std::size_t>(power));
    Result res;
    res.doc = {{"lattice", to_json(L)}, {"op", to_string(op)}, {"power", power}, {"input", to_json(p)},
               {"result", to_json(out)}};
    res.table.preamble = {describe(L), std::string("op: ") + to_string(op) + "^" + std::to_string(power),
                          "input: " + to_string(p), "result: " + to_string(out)};
    res.table.header = header_with_approx({"k", "coefficient"}, approx);
    for (long k = 0; k <= out.degree(); ++k) res.table.rows.push_back(scalar_row(k, {out[static_cast<std::size_t>(k)]}, approx));
    return res;
}

inline Result family_result(const std::string& kind, json params, const RecurrencePair& rec, bool approx) {
    Result res;
    res.doc = {{"family", kind}, {"params", std::move(params)}, {"B", to_json(rec.B)}, {"C", to_json(rec.C)}};
    res.table = recurrence_table(rec, approx);
    res.table.preamble.insert(res.table.preamble.begin(), "family: " + kind);
    return res;
}

inline Result cmd_pearson_solve(const Lattice& L, const PearsonData& pd, long N, bool approx) {
    const auto T = build_tables(L, static_cast<std::size_t>(std::max(0L, N - 1)));
    const auto u = pearson_moments(pd, T, static_cast<std::size_t>(N));
    const auto K = static_cast<std::size_t>(N / 2);
    const auto rec = recurrence_from_moments(u, K);
    Result res;
    json violations = json::array();
    for (const auto& v : regularity_scan(pd, L, static_cast<long>(K)))
        violations.push_back({{"n", v.n}, {"kind", v.kind}});
    res.doc = {{"lattice", to_json(L)}, {"phi", to_json(pd.phi)}, {"psi", to_json(pd.psi)},
               {"moments", to_json(u)}, {"recurrence", to_json(rec)}, {"violations", violations}};
    res.table.preamble = {describe(L), "phi: " + to_string(pd.phi), "psi: " + to_string(pd.psi)};
    res.table.header = header_with_approx({"n", "m_n", "B_n", "C_{n+1}"}, approx);
    for (long n = 0; n <= N; ++n) {
        const auto un = static_cast<std::size_t>(n);
        std::vector<std::string> row{std::to_string(n), to_string(u.moments[un])};
        row.push_back(un < K ? to_string(rec.B[un]) : "");
        row.push_back(un < K ? to_string(rec.C[un]) : "");
        if (approx) {
            row.push_back(to_approx_string(u.moments[un]));
            row.push_back(un < K ? to_approx_string(rec.B[un]) : "");
            row.push_back(un < K ? to_approx_string(rec.C[un]) : "");
        }
        res.table.rows.push_back(std::move(row));
    }
    return res;
}

inline json error_doc(const std::string& command, const std::string& kind, const std::string& message,
                      std::optional<long> index = std::nullopt) {
    json j{{"command", command}, {"error", message}, {"kind", kind}};
    if (index) j["index"] = *index;
    return j;
}

// ---------------------------------------------------------------------------
// Dispatch

/// Runs one command line (without the program name). Writes the report to
/// out, diagnostics to err, and returns the exit code.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact divided-difference calculus on nonuniform lattices", "latops"};
    app.require_subcommand(1);

    std::string format = "table";
    bool approx = false;
    std::deque<long> degree_store;
    std::map<const CLI::App*, long*> degree_of;
    auto common = [&](CLI::App* sub, long default_n) {
        sub->add_option("--format", format, "table, csv or json")
            ->check(CLI::IsMember({"table", "csv", "json"}))
            ->capture_default_str();
        sub->add_flag("--approx", approx, "add decimal columns (table and csv)");
        if (default_n >= 0) {
            long& slot = degree_store.emplace_back(default_n);
            degree_of[sub] = &slot;
            sub->add_option("--n", slot, "degree bound")->capture_default_str();
        }
    };

    // lattice-info
    LatticeFlags lat_info;
    auto* info = app.add_subcommand("lattice-info", "structure constants of a lattice");
    lat_info.add_both(info);
    common(info, 5);

    // op-apply
    LatticeFlags lat_op;
    std::string op_name, poly_text;
    long power = 1;
    auto* opapply = app.add_subcommand("op-apply", "apply D_x or S_x to a polynomial");
    lat_op.add_both(opapply);
    opapply->add_option("--op", op_name)->required()->check(CLI::IsMember({"dx", "sx"}));
    opapply->add_option("--poly", poly_text, "ascending coefficients c0,c1,...")->required();
    opapply->add_option("--power", power, "number of applications")->default_val(1);
    common(opapply, -1);

    // family
    auto* family = app.add_subcommand("family", "recurrence coefficients of a family");
    family->require_subcommand(1);
    std::string a1, a2, a3, a4, aw_Q;
    auto* fam_aw = family->add_subcommand("aw", "monic Askey-Wilson");
    fam_aw->add_option("--a1", a1)->required();
    fam_aw->add_option("--a2", a2)->required();
    fam_aw->add_option("--a3", a3)->required();
    fam_aw->add_option("--a4", a4)->required();
    fam_aw->add_option("--Q", aw_Q, "q^{1/2}")->required();
    common(fam_aw, 5);
    std::string b1, b2;
    auto* fam_mx = family->add_subcommand("meixner2", "monic Meixner polynomials of the second kind");
    fam_mx->add_option("--b1", b1)->required();
    fam_mx->add_option("--b2", b2)->required();
    common(fam_mx, 5);
    LatticeFlags lat_f1;
    std::string seed_a;
    auto* fam_t1 = family->add_subcommand("thm1", "solution family on a q-quadratic lattice");
    lat_f1.add_q(fam_t1);
    fam_t1->add_option("--a", seed_a, "seed with r = a^2")->required();
    common(fam_t1, 5);
    LatticeFlags lat_f2;
    std::string B0_f2 = "0", C1_f2;
    auto* fam_t2 = family->add_subcommand("thm2", "solution family on the linear lattice");
    lat_f2.add_quadratic(fam_t2);
    fam_t2->add_option("--B0,--b0", B0_f2)->capture_default_str();
    fam_t2->add_option("--C1", C1_f2)->required();
    common(fam_t2, 5);

    // pearson-solve
    LatticeFlags lat_ps;
    std::string phi_text, psi_text;
    auto* pearson = app.add_subcommand("pearson-solve", "moments and recurrence of D_x(phi u) = S_x(psi u)");
    lat_ps.add_both(pearson);
    pearson->add_option("--phi", phi_text, "a,b,c for a z^2 + b z + c (highest degree first)")->required();
    pearson->add_option("--psi", psi_text, "d,e for d z + e")->required();
    common(pearson, 10);

    // verify
    auto* verify = app.add_subcommand("verify", "verification suites");
    verify->require_subcommand(1);
    LatticeFlags lat_v1;
    std::string v1_a;
    auto* v_thm1 = verify->add_subcommand("thm1", "four-way cross-validation of the q-lattice family");
    lat_v1.add_q(v_thm1);
    v_thm1->add_option("--a", v1_a)->required();
    common(v_thm1, 10);
    LatticeFlags lat_v2;
    std::string v2_B0 = "0", v2_C1;
    auto* v_thm2 = verify->add_subcommand("thm2", "four-way cross-validation of the linear-lattice family");
    lat_v2.add_quadratic(v_thm2);
    v_thm2->add_option("--B0,--b0", v2_B0)->capture_default_str();
    v_thm2->add_option("--C1", v2_C1)->required();
    common(v_thm2, 10);
    LatticeFlags lat_ne;
    std::string ne_B0 = "0", ne_C1 = "1";
    auto* v_ne = verify->add_subcommand("nonexistence", "forcing witness on quadratic lattices with beta != 0");
    lat_ne.add_quadratic(v_ne);
    v_ne->add_option("--B0,--b0", ne_B0)->capture_default_str();
    v_ne->add_option("--C1", ne_C1)->capture_default_str();
    common(v_ne, 10);
    LatticeFlags lat_bz;
    std::string bz_B0;
    auto* v_bz = verify->add_subcommand("bzero", "B0 forcing on q-quadratic lattices");
    lat_bz.add_q(v_bz);
    v_bz->add_option("--B0,--b0", bz_B0)->required();
    common(v_bz, 10);
    LatticeFlags lat_id;
    std::string id_family, id_a, id_B0 = "0", id_C1;
    std::uint64_t id_seed = 1;
    auto* v_id = verify->add_subcommand("identities", "dual-basis and functional identities on a family");
    lat_id.add_both(v_id);
    v_id->add_option("--family", id_family)->required()->check(CLI::IsMember({"thm1", "thm2"}));
    v_id->add_option("--a", id_a, "thm1 seed");
    v_id->add_option("--B0,--b0", id_B0, "thm2 B0")->capture_default_str();
    v_id->add_option("--C1", id_C1, "thm2 C1");
    v_id->add_option("--seed", id_seed)->default_val(1);
    common(v_id, 5);

    // selftest
    std::uint64_t st_seed = 1;
    auto* selftest_cmd = app.add_subcommand("selftest", "randomized invariant suites");
    selftest_cmd->add_option("--seed", st_seed)->default_val(1);
    common(selftest_cmd, 10);

    std::string command;
    try {
        std::vector<const char*> argv{"latops"};
        for (const auto& a : args) argv.push_back(a.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::ExtrasError&) {
        err << "usage error: unexpected arguments:";
        for (const auto& a : app.remaining(true)) err << ' ' << a;
        err << '\n';
        return usage;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return usage;
    }

    Result res;
    long n = -1;
    try {
        for (const CLI::App* sub : app.get_subcommands()) {
            command = sub->get_name();
            const CLI::App* leaf = sub;
            for (const CLI::App* child : sub->get_subcommands()) {
                command += " " + child->get_name();
                leaf = child;
            }
            if (auto it = degree_of.find(leaf); it != degree_of.end()) n = checked_degree(*it->second);
        }

        if (info->parsed()) {
            res = cmd_lattice_info(lat_info.lattice(), n, approx);
        } else if (opapply->parsed()) {
            if (power < 0) throw UsageError("--power must be nonnegative");
            const Lattice L = lat_op.lattice();
            const Poly p(scalar_list("--poly", poly_text));
            checked_degree(p.degree() < 0 ? 0 : p.degree(), "degree of --poly");
            res = cmd_op_apply(L, op_name == "dx" ? Op::dx : Op::sx, p, power, approx);
        } else if (fam_aw->parsed()) {
            const AWParams p{scalar_flag("--a1", a1), scalar_flag("--a2", a2), scalar_flag("--a3", a3),
                             scalar_flag("--a4", a4), rational_flag("--Q", aw_Q)};
            RecurrencePair rec = family_recurrence([](const AWParams& x, long k) { return aw_coeffs(x, k); }, p, n);
            res = family_result("aw", to_json(p), rec, approx);
        } else if (fam_mx->parsed()) {
            const auto sb1 = scalar_flag("--b1", b1);
            const auto sb2 = scalar_flag("--b2", b2);
            const MeixnerParams p(sb1, sb2);
            RecurrencePair rec =
                family_recurrence([](const MeixnerParams& x, long k) { return meixner2_coeffs(x, k); }, p, n);
            res = family_result("meixner2", to_json(p), rec, approx);
        } else if (fam_t1->parsed()) {
            const Thm1Params p{lat_f1.q_lattice(), scalar_flag("--a", seed_a)};
            auto rec = thm1_recurrence(p, n);
            res = family_result("thm1", to_json(p), rec, approx);
            res.doc["C1"] = to_string(thm1_c1(p));
            json pd = to_json(thm1_pearson(p));
            res.doc["pearson"] = pd;
        } else if (fam_t2->parsed()) {
            const Thm2Params p{lat_f2.quadratic_lattice(), scalar_flag("--B0", B0_f2), scalar_flag("--C1", C1_f2)};
            auto rec = thm2_recurrence(p, n);
            res = family_result("thm2", to_json(p), rec, approx);
            res.doc["pearson"] = to_json(thm2_pearson(p));
            res.doc["meixner2"] = to_json(thm2_meixner_params(p));
        } else if (pearson->parsed()) {
            const Lattice L = lat_ps.lattice();
            auto phi = scalar_list("--phi", phi_text);
            auto psi = scalar_list("--psi", psi_text);
            if (phi.size() > 3) throw UsageError("--phi takes at most three coefficients");
            if (psi.size() != 2) throw UsageError("--psi takes exactly two coefficients");
            std::reverse(phi.begin(), phi.end());
            std::reverse(psi.begin(), psi.end());
            res = cmd_pearson_solve(L, PearsonData(Poly(phi), Poly(psi)), n, approx);
        } else if (v_thm1->parsed()) {
            const Thm1Params p{lat_v1.q_lattice(), scalar_flag("--a", v1_a)};
            res = report_result(cross_validate_thm1(p, n), to_json(p));
        } else if (v_thm2->parsed()) {
            const Thm2Params p{lat_v2.quadratic_lattice(), scalar_flag("--B0", v2_B0), scalar_flag("--C1", v2_C1)};
            res = report_result(cross_validate_thm2(p, n), to_json(p));
        } else if (v_ne->parsed()) {
            const Lattice L = lat_ne.quadratic_lattice();
            const Scalar B0 = scalar_flag("--B0", ne_B0);
            const Scalar C1 = scalar_flag("--C1", ne_C1);
            res = report_result(nonexistence_quadratic(L, B0, C1, n),
                                {{"lattice", to_json(L)}, {"B0", to_string(B0)}, {"C1", to_string(C1)}});
        } else if (v_bz->parsed()) {
            const Lattice L = lat_bz.q_lattice();
            const Scalar B0 = scalar_flag("--B0", bz_B0);
            res = report_result(bzero_forcing_qlattice(L, B0, n), {{"lattice", to_json(L)}, {"B0", to_string(B0)}});
        } else if (v_id->parsed()) {
            if (id_family == "thm1") {
                if (id_a.empty()) throw UsageError("--family thm1 needs --a");
                const Thm1Params p{lat_id.q_lattice(), scalar_flag("--a", id_a)};
                res = report_result(functional_identity_suite(p, n, id_seed), to_json(p));
            } else {
                if (id_C1.empty()) throw UsageError("--family thm2 needs --C1");
                if (lat_id.any_q()) throw UsageError("--family thm2 takes --beta/--c5/--c6");
                const Thm2Params p{lat_id.quadratic_lattice(), scalar_flag("--B0", id_B0),
                                   scalar_flag("--C1", id_C1)};
                res = report_result(functional_identity_suite(p, n, id_seed), to_json(p));
            }
        } else if (selftest_cmd->parsed()) {
            res = report_result(selftest(n, st_seed), json::object());
        }
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return usage;
    } catch (const regularity_error& e) {
        out << dump(error_doc(command, "regularity", e.what(), e.index()));
        return failure;
    } catch (const std::exception& e) {
        // invalid parameters, degree bounds and domain errors are mathematical failures
        out << dump(error_doc(command, "invalid", e.what()));
        return failure;
    }

    if (format == "json")
        out << dump(res.doc);
    else if (format == "csv")
        out << render_csv(res.table);
    else
        out << render_table(res.table);
    return res.code;
}

}  // namespace latops::cli

#endif
