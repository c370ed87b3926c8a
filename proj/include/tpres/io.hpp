/*
   Copyright 2026 The tpres Authors

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

/*
 * JSON forms (scalars are always string tokens on output; plain JSON
 * integers are also accepted on input):
 *
 *   matrix   {"field": tag, "dense": [[tok, ...], ...]}
 *            {"field": tag, "toeplitz": {"m": m, "n": n, "coords": [tok, ...]}}
 *            {"field": tag, "hankel":   {"m": m, "n": n, "coords": [tok, ...]}}
 *   spec     {"form": "v"|"vf"|"w", "gamma": tok, "r": tok, "alpha": tok, "beta": tok}
 *   verdict  {"preserver", "kind", "params", "witness", "det_preserver", "strong", "regime"}
 */

#pragma once

#include <json.hpp>

#include <optional>
#include <string>

#include "classifier.hpp"
#include "oracle.hpp"

namespace tpres {

using json = nlohmann::json;

// ---------------------------------------------------------------------------
// scalars and vectors

inline Scalar scalar_from_json(const json& j, const FieldDescriptor& d) {
    if (j.is_string()) return parse_scalar(j.get<std::string>(), d);
    if (j.is_number_integer()) {
        const auto v = j.get<long long>();
        if (d.is_finite() && v < 0) throw error(errc::not_a_residue, "negative residue " + std::to_string(v));
        return parse_scalar(std::to_string(v), d);
    }
    throw error(errc::parse_error, "scalar must be a string token or an integer, got " + j.dump());
}

inline json to_json(const std::vector<Scalar>& v) {
    json a = json::array();
    for (const auto& s : v) a.push_back(format_scalar(s));
    return a;
}

inline std::vector<Scalar> vector_from_json(const json& j, const FieldDescriptor& d) {
    if (!j.is_array()) throw error(errc::parse_error, "expected an array of scalars");
    std::vector<Scalar> v;
    for (const auto& e : j) v.push_back(scalar_from_json(e, d));
    return v;
}

inline json parameter_to_json(const std::optional<ProjectiveParameter>& p) {
    if (!p) return nullptr;
    return format_parameter(*p);
}

inline std::optional<ProjectiveParameter> parameter_from_json(const json& j, const FieldDescriptor& d) {
    if (j.is_null()) return std::nullopt;
    if (j.is_string()) return parse_parameter(j.get<std::string>(), d);
    return ProjectiveParameter::finite(scalar_from_json(j, d));
}

/// The "field" member if present, else the fallback; conflicting tags are an error.
inline FieldDescriptor field_from_json(const json& j, const std::optional<FieldDescriptor>& fallback) {
    if (j.is_object() && j.contains("field")) {
        const auto d = FieldDescriptor::parse(j.at("field").get<std::string>());
        if (fallback && !(*fallback == d))
            throw error(errc::parse_error, "field " + d.tag() + " in input conflicts with " + fallback->tag());
        return d;
    }
    if (fallback) return *fallback;
    return FieldDescriptor::rational();
}

// ---------------------------------------------------------------------------
// matrices

inline json to_json(const DenseMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(to_json(m.row(i)));
    return {{"field", m.field().tag()}, {"dense", rows}};
}

inline json to_json(const ToeplitzMatrix& t) {
    return {{"field", t.field().tag()},
            {"toeplitz", {{"m", t.rows()}, {"n", t.cols()}, {"coords", to_json(t.coords())}}}};
}

inline json to_json(const HankelMatrix& h) {
    return {{"field", h.field().tag()},
            {"hankel", {{"m", h.rows()}, {"n", h.cols()}, {"coords", to_json(h.coords())}}}};
}

struct MatrixInput {
    enum class Shape { Dense, Toeplitz, Hankel };
    Shape shape;
    DenseMatrix dense;
    std::vector<Scalar> coords;  // Toeplitz / Hankel only
};

inline MatrixInput matrix_from_json(const json& j, const std::optional<FieldDescriptor>& fallback) {
    if (!j.is_object()) throw error(errc::parse_error, "matrix JSON must be an object");
    const auto d = field_from_json(j, fallback);
    if (j.contains("dense")) {
        const auto& rows = j.at("dense");
        if (!rows.is_array() || rows.empty()) throw error(errc::parse_error, "\"dense\" must be a nonempty array");
        std::vector<std::vector<Scalar>> parsed;
        for (const auto& r : rows) parsed.push_back(vector_from_json(r, d));
        return {MatrixInput::Shape::Dense, DenseMatrix::from_rows(d, parsed), {}};
    }
    for (const char* key : {"toeplitz", "hankel"}) {
        if (!j.contains(key)) continue;
        const auto& t = j.at(key);
        const auto m = t.at("m").get<std::size_t>();
        const auto n = t.at("n").get<std::size_t>();
        auto coords = vector_from_json(t.at("coords"), d);
        if (std::string(key) == "toeplitz") {
            auto tm = ToeplitzMatrix::from_coords(d, m, n, coords);
            return {MatrixInput::Shape::Toeplitz, tm.dense(), std::move(coords)};
        }
        auto hm = HankelMatrix::from_coords(d, m, n, coords);
        return {MatrixInput::Shape::Hankel, hm.dense(), std::move(coords)};
    }
    throw error(errc::parse_error, "matrix JSON needs \"dense\", \"toeplitz\" or \"hankel\"");
}

// ---------------------------------------------------------------------------
// specs, factorizations, verdicts

inline json to_json(const GeneratorSpec& s) {
    json j = {{"form", std::string(form_tag(s.form))},
              {"gamma", format_scalar(s.gamma)},
              {"r", format_scalar(s.r)},
              {"alpha", format_scalar(s.alpha)}};
    if (s.form == PreserverForm::WForm && s.beta) j["beta"] = format_scalar(*s.beta);
    return j;
}

inline GeneratorSpec spec_from_json(const json& j, const FieldDescriptor& d) {
    if (!j.is_object()) throw error(errc::parse_error, "spec JSON must be an object");
    GeneratorSpec s;
    s.form = parse_form(j.at("form").get<std::string>());
    s.gamma = scalar_from_json(j.at("gamma"), d);
    s.r = scalar_from_json(j.at("r"), d);
    s.alpha = j.contains("alpha") ? scalar_from_json(j.at("alpha"), d) : Scalar::zero(d);
    if (j.contains("beta") && !j.at("beta").is_null()) s.beta = scalar_from_json(j.at("beta"), d);
    s.validate();
    return s;
}

inline json to_json(const std::optional<RankOneFactorization>& f) {
    if (!f) return {{"rank_one", false}};
    return {{"rank_one", true}, {"mu", format_scalar(f->scale)}, {"xi", format_parameter(f->parameter)}};
}

struct VerdictExtras {
    std::optional<bool> det_preserver;
    std::optional<bool> strong;
    Regime regime = Regime::Proven;
};

inline json to_json(const PreserverVerdict& v, const FieldDescriptor& d, const VerdictExtras& extras = {}) {
    json j;
    j["field"] = d.tag();
    j["preserver"] = v.is_preserver();
    j["kind"] = v.kind();
    if (v.is_canonical()) {
        j["params"] = to_json(v.canonical().spec);
        j["params"].erase("form");
    } else if (v.is_rank_one_functional()) {
        const auto& f = v.rank_one_functional();
        j["params"] = {{"h", {{"mu", format_scalar(f.h.scale)}, {"xi", format_parameter(f.h.parameter)}}},
                       {"c", to_json(f.c)}};
    } else {
        j["params"] = json::object();
    }
    j["witness"] = v.is_preserver() ? json(nullptr) : parameter_to_json(v.not_preserver().witness);
    j["det_preserver"] = extras.det_preserver ? json(*extras.det_preserver) : json(nullptr);
    j["strong"] = extras.strong ? json(*extras.strong) : json(nullptr);
    j["regime"] = std::string(regime_tag(extras.regime));
    return j;
}

inline PreserverVerdict verdict_from_json(const json& j, const std::optional<FieldDescriptor>& fallback) {
    const auto d = field_from_json(j, fallback);
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "none") return NotPreserver{parameter_from_json(j.value("witness", json(nullptr)), d)};
    const auto& params = j.at("params");
    if (kind == "rank-one-functional") {
        const auto& h = params.at("h");
        const auto c = vector_from_json(params.at("c"), d);
        const auto point = parse_parameter(h.at("xi").get<std::string>(), d);
        return RankOneFunctional{moment_vector(point, scalar_from_json(h.at("mu"), d), c.size()), c};
    }
    json spec = params;
    spec["form"] = kind;
    return Canonical{spec_from_json(spec, d)};
}

// ---------------------------------------------------------------------------
// reports

inline json to_json(const DeterminantReport& r) {
    return {{"det_preserver", r.preserver},
            {"det_product", format_scalar(r.det_product)},
            {"gamma_r_factor", format_scalar(r.gamma_r_factor)},
            {"alpha_beta_factor", format_scalar(r.alpha_beta_factor)}};
}

inline json to_json(const OracleCheck& c) {
    return {{"preserver", c.preserver}, {"witness", parameter_to_json(c.witness)}, {"complete", c.complete}};
}

inline json to_json(const OracleReport& r) {
    json dis = json::array();
    for (const auto& d : r.disagreements)
        dis.push_back({{"L", to_json(d.l)}, {"classifier", to_json(d.classifier, r.field)}, {"oracle", to_json(d.oracle)}});
    json verdicts = json::object();
    for (const auto& [k, v] : r.verdicts) verdicts[k] = v;
    return {{"field", r.field.tag()},
            {"l", r.l},
            {"mode", std::string(mode_tag(r.mode))},
            {"seed", r.seed},
            {"regime", std::string(regime_tag(r.regime))},
            {"tested", r.tested},
            {"agreements", r.agreements},
            {"disagreement_count", r.disagreements.size()},
            {"disagreements", dis},
            {"unexpected_not_preserver", r.unexpected_not_preserver},
            {"verdicts", verdicts}};
}

inline json to_json(const CensusResult& c, const FieldDescriptor& d, std::size_t m, std::size_t n) {
    return {{"field", d.tag()},
            {"m", m},
            {"n", n},
            {"count", c.count},
            {"parametric_count", c.parametric_count},
            {"sets_equal", c.sets_equal}};
}

inline json to_json(const TargetReport& r) {
    auto poly = [](const std::optional<Polynomial>& p) { return p ? to_json(p->coeffs()) : json(nullptr); };
    return {{"preserver", r.preserver},
            {"u_gcd", poly(r.u_gcd)},
            {"v_gcd", poly(r.v_gcd)},
            {"u_nonvanishing", r.u_nonvanishing},
            {"v_nonvanishing", r.v_nonvanishing},
            {"infinity_ok", r.infinity_ok},
            {"size_two", r.size_two}};
}

}  // namespace tpres
