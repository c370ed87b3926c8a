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
 * The tpres command line, callable in-process through run().
 *
 *   classify   coordinate matrix L            -> verdict
 *   build      spec or verdict                 -> L, M, N
 *   factor     Toeplitz matrix                 -> mu, xi
 *   det-check  spec, verdict or L              -> determinant report
 *   oracle     (no input)                      -> classifier/oracle report
 *   census     (no input)                      -> rank-one census
 *   hankel     Toeplitz or Hankel matrix       -> the flip conjugate
 *
 * Exit codes: 0 success (whatever the verdict), 2 bad input, 3 budget.
 */

#pragma once

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "io.hpp"

namespace tpres::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_input = 2;
inline constexpr int exit_budget = 3;

inline std::uint64_t default_budget() {
    if (const char* env = std::getenv("TPRES_BUDGET")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw error(errc::parse_error, std::string("TPRES_BUDGET is not a number: ") + env);
        }
    }
    return 10'000'000;
}

struct Request {
    std::string field_tag;  // empty: from the input, else q
    std::string input;
    std::string inline_json;
    std::string output;
    bool pretty = false;
    std::size_t n = 0;
    std::vector<std::size_t> rect;
    bool hankel = false;
    std::uint64_t seed = 42;
    std::uint64_t samples = 100000;
    std::uint64_t budget = 0;
    unsigned threads = 1;
    std::string mode = "families";
    std::size_t l = 0;
};

namespace detail {

inline json read_input(const Request& rq, std::istream& in) {
    const bool has_path = !rq.input.empty(), has_inline = !rq.inline_json.empty();
    if (has_path == has_inline) throw error(errc::parse_error, "give exactly one of --input and --json");
    std::string text;
    if (has_inline) {
        text = rq.inline_json;
    } else if (rq.input == "-") {
        text.assign(std::istreambuf_iterator<char>(in), {});
    } else {
        std::ifstream f(rq.input);
        if (!f) throw error(errc::parse_error, "cannot open " + rq.input);
        text.assign(std::istreambuf_iterator<char>(f), {});
    }
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw error(errc::parse_error, std::string("malformed JSON: ") + e.what());
    }
}

/// (m, n) from --rect or --n; zero when neither was given.
inline std::pair<std::size_t, std::size_t> shape(const Request& rq) {
    if (!rq.rect.empty()) {
        if (rq.rect.size() != 2) throw error(errc::parse_error, "--rect takes m,n");
        if (rq.rect[0] < 2 || rq.rect[1] < 2) throw error(errc::too_small, "sizes must be at least 2");
        return {rq.rect[0], rq.rect[1]};
    }
    if (rq.n != 0) {
        if (rq.n < 2) throw error(errc::too_small, "n must be at least 2");
        return {rq.n, rq.n};
    }
    return {0, 0};
}

inline void check_length(const Request& rq, std::size_t l) {
    const auto [m, n] = shape(rq);
    if (m != 0 && m + n - 1 != l)
        throw error(errc::length_mismatch,
                    "L is " + std::to_string(l) + "x" + std::to_string(l) + ", expected " + std::to_string(m + n - 1));
}

/// A spec from either a spec object or a canonical verdict.
inline GeneratorSpec spec_from_input(const json& j, const FieldDescriptor& d) {
    if (j.contains("form")) return spec_from_json(j, d);
    if (j.contains("kind")) {
        const auto v = verdict_from_json(j, d);
        if (!v.is_canonical()) throw error(errc::not_canonical, "verdict of kind " + v.kind() + " has no spec");
        return v.canonical().spec;
    }
    throw error(errc::parse_error, "expected a spec or a canonical verdict");
}

inline std::string summary(const PreserverVerdict& v, const FieldDescriptor& d, Regime regime) {
    std::ostringstream s;
    if (v.is_canonical()) {
        const auto& spec = v.canonical().spec;
        s << "canonical preserver of form " << form_tag(spec.form) << " with gamma=" << format_scalar(spec.gamma)
          << " r=" << format_scalar(spec.r) << " alpha=" << format_scalar(spec.alpha);
        if (spec.beta) s << " beta=" << format_scalar(*spec.beta);
    } else if (v.is_rank_one_functional()) {
        s << "rank-one functional preserver onto h(" << format_parameter(v.rank_one_functional().h.parameter) << ")";
    } else {
        s << "not a preserver";
        if (v.not_preserver().witness) s << ", witness xi=" << format_parameter(*v.not_preserver().witness);
    }
    s << " over " << (d.kind() == FieldKind::Rational ? std::string("the real closure of Q") : d.tag());
    if (regime == Regime::SmallField) s << " (outside proven regime)";
    return s.str();
}

// ---------------------------------------------------------------------------
// commands

inline json cmd_classify(const Request& rq, const FieldDescriptor& d, const json& j) {
    const auto input = matrix_from_json(j, d);
    const auto& l = input.dense;
    if (!l.is_square()) throw error(errc::not_square, "coordinate matrix must be square");
    check_length(rq, l.rows());
    // Hankel coordinates give the same coordinate matrix, so --hankel only labels the input
    const auto verdict = classify(l);
    VerdictExtras extras;
    extras.regime = regime(d, l.rows());
    if (verdict.is_canonical() && l.rows() % 2 == 1) {
        extras.det_preserver = is_determinant_preserver(verdict, (l.rows() + 1) / 2).preserver;
        extras.strong = is_strong_preserver(l);
    } else if (verdict.is_preserver()) {
        extras.strong = false;
    }
    auto out = to_json(verdict, d, extras);
    if (rq.hankel) out["coordinates"] = "hankel";
    if (rq.pretty) out["summary"] = summary(verdict, d, extras.regime);
    return out;
}

inline json cmd_build(const Request& rq, const FieldDescriptor& d, const json& j) {
    const auto spec = spec_from_input(j, d);
    auto [m, n] = shape(rq);
    if (m == 0) throw error(errc::parse_error, "build needs --n or --rect");
    auto pair = build_preserver(spec, m, n);
    if (rq.hankel) {
        if (m != n) throw error(errc::not_square, "Hankel pairs need m = n");
        pair = hankel_pair(pair);
    }
    const auto l = rq.hankel ? induced_hankel_coordinate_matrix(pair.left, pair.right)
                             : induced_coordinate_matrix(pair);
    json out = {{"field", d.tag()}, {"spec", to_json(spec)}, {"L", to_json(l)},
                {"M", to_json(pair.left)}, {"N", to_json(pair.right)}};
    if (rq.hankel) out["coordinates"] = "hankel";
    if (rq.pretty) out["summary"] = "preserver pair on " + std::to_string(m) + "x" + std::to_string(n) +
                                    (rq.hankel ? " Hankel" : " Toeplitz") + " matrices";
    return out;
}

inline json cmd_factor(const Request& rq, const FieldDescriptor& d, const json& j) {
    const auto input = matrix_from_json(j, d);
    // F_m H is Toeplitz with the same coordinates and the same rank
    const auto t = input.shape == MatrixInput::Shape::Hankel
                       ? ToeplitzMatrix::from_coords(d, input.dense.rows(), input.dense.cols(), input.coords)
                       : ToeplitzMatrix::from_dense(input.dense);
    auto out = to_json(rank_one_toeplitz_factor(t));
    out["field"] = d.tag();
    if (rq.pretty)
        out["summary"] = out["rank_one"].get<bool>()
                             ? "rank one: mu=" + out["mu"].get<std::string>() + " xi=" + out["xi"].get<std::string>()
                             : std::string("not rank one");
    return out;
}

inline json cmd_det_check(const Request& rq, const FieldDescriptor& d, const json& j) {
    GeneratorSpec spec;
    std::size_t n = shape(rq).second;
    if (j.contains("dense") || j.contains("toeplitz") || j.contains("hankel")) {
        const auto l = matrix_from_json(j, d).dense;
        if (!l.is_square() || l.rows() % 2 == 0) throw error(errc::length_mismatch, "L must be (2n-1)x(2n-1)");
        check_length(rq, l.rows());
        const auto v = classify(l);
        if (!v.is_canonical()) throw error(errc::not_canonical, "L classifies as " + v.kind());
        spec = v.canonical().spec;
        n = (l.rows() + 1) / 2;
    } else {
        spec = spec_from_input(j, d);
        if (n == 0) throw error(errc::parse_error, "det-check on a spec needs --n");
        if (shape(rq).first != n) throw error(errc::not_square, "determinant checks are square only");
    }
    auto out = to_json(is_determinant_preserver(spec, n));
    out["field"] = d.tag();
    out["n"] = n;
    if (rq.pretty)
        out["summary"] = out["det_preserver"].get<bool>() ? std::string("preserves the determinant")
                                                           : "scales the determinant by " +
                                                                 out["det_product"].get<std::string>();
    return out;
}

inline json cmd_oracle(const Request& rq, const FieldDescriptor& d) {
    OracleOptions opt;
    opt.mode = parse_mode(rq.mode);
    opt.seed = rq.seed;
    opt.samples = rq.samples;
    opt.budget = rq.budget;
    opt.threads = rq.threads;
    std::size_t l = rq.l;
    if (l == 0) {
        const auto [m, n] = shape(rq);
        if (m == 0) throw error(errc::parse_error, "oracle needs --l, --n or --rect");
        l = m + n - 1;
    }
    const auto report = compare_classifier_oracle(d, l, opt);
    auto out = to_json(report);
    if (rq.pretty)
        out["summary"] = std::to_string(report.tested) + " tested, " + std::to_string(report.disagreements.size()) +
                         " disagreements (" + std::string(regime_tag(report.regime)) + ")";
    return out;
}

inline json cmd_census(const Request& rq, const FieldDescriptor& d) {
    const auto [m, n] = shape(rq);
    if (m == 0) throw error(errc::parse_error, "census needs --n or --rect");
    const auto c = rank_one_census(d, m, n, rq.budget, rq.threads);
    auto out = to_json(c, d, m, n);
    if (rq.pretty)
        out["summary"] = std::to_string(c.count) + " rank-one matrices, " +
                         (c.sets_equal ? "matching" : "not matching") + " the parametric enumeration";
    return out;
}

inline json cmd_hankel(const Request& rq, const FieldDescriptor& d, const json& j) {
    const auto input = matrix_from_json(j, d);
    json out;
    if (input.shape == MatrixInput::Shape::Hankel) {
        out = to_json(toeplitz_conjugate(HankelMatrix::from_dense(input.dense)));
    } else {
        out = to_json(hankel_conjugate(ToeplitzMatrix::from_dense(input.dense)));
    }
    if (rq.pretty) out["summary"] = "flip conjugate";
    return out;
}

}  // namespace detail

/// Runs one command; args excludes the program name.
inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Linear preservers of rank-one Toeplitz matrices", "tpres"};
    app.require_subcommand(1);
    Request rq;

    auto add_common = [&rq](CLI::App* sub, bool needs_input) {
        sub->add_option("--field", rq.field_tag, "q, qi or gf:<p>");
        if (needs_input) {
            sub->add_option("--input,-i", rq.input, "input JSON file, - for stdin");
            sub->add_option("--json", rq.inline_json, "inline input JSON");
        }
        sub->add_option("--output,-o", rq.output, "write JSON here instead of stdout");
        sub->add_flag("--pretty", rq.pretty, "indented JSON with a summary field");
        sub->add_option("--n", rq.n, "square size");
        sub->add_option("--rect", rq.rect, "rectangular size m,n")->delimiter(',')->expected(2);
    };

    auto* classify_cmd = app.add_subcommand("classify", "classify a coordinate matrix");
    add_common(classify_cmd, true);
    classify_cmd->add_flag("--hankel", rq.hankel, "input uses Hankel coordinates");

    auto* build_cmd = app.add_subcommand("build", "build M, N and L from a spec");
    add_common(build_cmd, true);
    build_cmd->add_flag("--hankel", rq.hankel, "build the Hankel version");

    auto* factor_cmd = app.add_subcommand("factor", "rank-one factorization of a Toeplitz matrix");
    add_common(factor_cmd, true);

    auto* det_cmd = app.add_subcommand("det-check", "determinant preservation");
    add_common(det_cmd, true);

    auto* oracle_cmd = app.add_subcommand("oracle", "compare the classifier with the brute-force oracle");
    add_common(oracle_cmd, false);
    auto* census_cmd = app.add_subcommand("census", "count rank-one Toeplitz matrices");
    add_common(census_cmd, false);
    for (auto* sub : {oracle_cmd, census_cmd}) {
        sub->add_option("--seed", rq.seed);
        sub->add_option("--samples", rq.samples);
        sub->add_option("--budget", rq.budget);
        sub->add_option("--threads", rq.threads);
    }
    oracle_cmd->add_option("--mode", rq.mode, "families, random or exhaustive");
    oracle_cmd->add_option("--l", rq.l, "coordinate dimension");

    auto* hankel_cmd = app.add_subcommand("hankel", "Toeplitz <-> Hankel conjugation");
    add_common(hankel_cmd, true);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return exit_input;
    }

    try {
        if (rq.budget == 0) rq.budget = default_budget();
        std::optional<FieldDescriptor> flag;
        if (!rq.field_tag.empty()) flag = FieldDescriptor::parse(rq.field_tag);
        json result;
        if (oracle_cmd->parsed() || census_cmd->parsed()) {
            const auto d = flag.value_or(FieldDescriptor::rational());
            result = oracle_cmd->parsed() ? detail::cmd_oracle(rq, d) : detail::cmd_census(rq, d);
        } else {
            const auto j = detail::read_input(rq, in);
            const auto d = field_from_json(j, flag);
            if (classify_cmd->parsed()) result = detail::cmd_classify(rq, d, j);
            else if (build_cmd->parsed()) result = detail::cmd_build(rq, d, j);
            else if (factor_cmd->parsed()) result = detail::cmd_factor(rq, d, j);
            else if (det_cmd->parsed()) result = detail::cmd_det_check(rq, d, j);
            else result = detail::cmd_hankel(rq, d, j);
        }

        const auto text = rq.pretty ? result.dump(2) : result.dump();
        if (rq.output.empty()) {
            out << text << "\n";
        } else {
            std::ofstream f(rq.output);
            if (!f) throw error(errc::parse_error, "cannot write " + rq.output);
            f << text << "\n";
        }
        return exit_ok;
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return e.code() == errc::budget_exceeded ? exit_budget : exit_input;
    } catch (const json::exception& e) {
        err << "error: ParseError: " << e.what() << "\n";
        return exit_input;
    }
}

}  // namespace tpres::cli
