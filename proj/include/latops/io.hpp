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

#ifndef LATOPS_IO_HPP
#define LATOPS_IO_HPP

// JSON rendering. Objects are std::map backed, so keys come out sorted and
// dumps are byte-stable for fixed input.

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

#include "verify.hpp"

namespace latops {

using json = nlohmann::json;

inline json to_json(const Scalar& s) { return to_string(s); }

inline json to_json(const std::vector<Scalar>& v) {
    json out = json::array();
    for (const auto& s : v) out.push_back(to_string(s));
    return out;
}

/// Ascending coefficients; the zero polynomial is [].
inline json to_json(const Poly& p) {
    json out = json::array();
    for (const auto& c : p.coeffs()) out.push_back(to_string(c));
    return out;
}

inline json to_json(const Lattice& L) {
    if (L.is_q()) {
        const auto& p = L.q_params();
        return {{"kind", "q"}, {"Q", to_string(p.Q)}, {"c1", to_string(p.c1)}, {"c2", to_string(p.c2)},
                {"c3", to_string(p.c3)}};
    }
    const auto& p = L.quadratic_params();
    return {{"kind", "quadratic"}, {"beta", to_string(p.beta)}, {"c5", to_string(p.c5)}, {"c6", to_string(p.c6)}};
}

inline Lattice lattice_from_json(const json& j) {
    auto s = [&](const char* key) { return parse_scalar(j.at(key).get<std::string>()); };
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "q")
        return Lattice::q_quadratic(parse_rational(j.at("Q").get<std::string>()), s("c1"), s("c2"), s("c3"));
    if (kind == "quadratic") return Lattice::quadratic(s("beta"), s("c5"), s("c6"));
    throw std::invalid_argument("unknown lattice kind '" + kind + "'");
}

inline json to_json(const MomentFunctional& u) { return {{"moments", to_json(u.valid())}, {"valid_len", u.valid_len}}; }

inline MomentFunctional moments_from_json(const json& j) {
    std::vector<Scalar> m;
    for (const auto& x : j.at("moments")) m.push_back(parse_scalar(x.get<std::string>()));
    return MomentFunctional(std::move(m), j.at("valid_len").get<std::size_t>());
}

inline json to_json(const RecurrencePair& r) { return {{"B", to_json(r.B)}, {"C", to_json(r.C)}}; }

inline json to_json(const PearsonData& pd) { return {{"phi", to_json(pd.phi)}, {"psi", to_json(pd.psi)}}; }

inline json to_json(const AWParams& p) {
    return {{"Q", to_string(p.Q)}, {"a1", to_string(p.a1)}, {"a2", to_string(p.a2)}, {"a3", to_string(p.a3)},
            {"a4", to_string(p.a4)}};
}

inline json to_json(const MeixnerParams& p) { return {{"b1", to_string(p.b1)}, {"b2", to_string(p.b2)}}; }

inline json to_json(const Thm1Params& p) { return {{"lattice", to_json(p.L)}, {"a", to_string(p.a)}}; }

inline json to_json(const Thm2Params& p) {
    return {{"lattice", to_json(p.L)}, {"B0", to_string(p.B0)}, {"C1", to_string(p.C1)}};
}

inline json to_json(const Witness& w) {
    json out{{"n", w.n}, {"lhs", w.lhs}, {"rhs", w.rhs}};
    if (w.moment) out["moment"] = *w.moment;
    return out;
}

inline json to_json(const Check& c) {
    json out{{"name", c.name}, {"range", {c.lo, c.hi}}, {"status", to_string(c.status)}};
    if (c.witness) out["witness"] = to_json(*c.witness);
    if (c.moments) out["moments"] = {c.moments->first, c.moments->second};
    return out;
}

inline json to_json(const Report& r) {
    json checks = json::array();
    for (const auto& c : r.checks) checks.push_back(to_json(c));
    json out{{"subject", r.subject}, {"checks", checks}, {"status", r.passed() ? "pass" : "fail"}};
    if (!r.values.empty()) out["values"] = r.values;
    if (r.error) out["error"] = *r.error;
    return out;
}

/// Canonical dump used by every emitter: two-space indent, trailing newline.
inline std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace latops

#endif
