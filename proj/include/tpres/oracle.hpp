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
 * Brute-force ground truth, independent of the classifier. Over GF(p) the
 * set R has (p-1)(p+1) elements, so L(R) in R is a finite check over the
 * p+1 projective points.
 */

#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "classifier.hpp"

namespace tpres {

/// Runs fn(0..chunks-1) on up to `threads` workers; results come back in
/// chunk order, so the outcome does not depend on the thread count.
template <class Fn>
auto parallel_chunks(std::size_t chunks, unsigned threads, Fn fn) -> std::vector<decltype(fn(std::size_t{0}))> {
    using Result = decltype(fn(std::size_t{0}));
    std::vector<std::optional<Result>> slots(chunks);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t c = next++; c < chunks; c = next++) slots[c] = fn(c);
    };
    const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(chunks)));
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < workers; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    std::vector<Result> out;
    out.reserve(chunks);
    for (auto& s : slots) out.push_back(std::move(*s));
    return out;
}

inline std::vector<ProjectiveParameter> projective_points(const FieldDescriptor& d) {
    if (!d.is_finite()) throw error(errc::infinite_field, d.tag() + " has infinitely many points");
    std::vector<ProjectiveParameter> out;
    for (std::uint64_t v = 0; v < d.characteristic(); ++v)
        out.push_back(ProjectiveParameter::finite(Scalar::residue(d, v)));
    out.push_back(ProjectiveParameter::infinity());
    return out;
}

/// Uniform over GF(p); over q and qi a small random rational (or Gaussian
/// rational) with numerators in [-range, range] and denominators in [1, 12].
inline Scalar random_scalar(const FieldDescriptor& d, std::mt19937_64& rng, long long range = 20) {
    if (d.is_finite()) return Scalar::residue(d, rng() % d.characteristic());
    auto rational = [&] {
        const long num = static_cast<long>(rng() % static_cast<std::uint64_t>(2 * range + 1)) - static_cast<long>(range);
        const auto den = static_cast<long>(rng() % 12) + 1;
        mpq_class q(num, den);
        q.canonicalize();
        return q;
    };
    if (d.kind() == FieldKind::GaussianRational) return Scalar::gaussian(rational(), rational());
    return Scalar::from_rational(d, rational());
}

inline Scalar random_nonzero_scalar(const FieldDescriptor& d, std::mt19937_64& rng, long long range = 20) {
    for (;;) {
        Scalar s = random_scalar(d, rng, range);
        if (!s.is_zero()) return s;
    }
}

inline ToeplitzMatrix random_toeplitz(const FieldDescriptor& d, std::size_t m, std::size_t n, std::mt19937_64& rng) {
    std::vector<Scalar> coords;
    for (std::size_t k = 0; k < m + n - 1; ++k) coords.push_back(random_scalar(d, rng));
    return ToeplitzMatrix::from_coords(d, m, n, std::move(coords));
}

// ---------------------------------------------------------------------------
// direct check

struct OracleCheck {
    bool preserver;
    std::optional<ProjectiveParameter> witness;
    bool complete;  // every projective point was examined
};

/// L(R) in R, checked point by point: all p+1 points over GF(p), otherwise
/// infinity plus `samples` random parameters.
inline OracleCheck direct_preserver_check(const DenseMatrix& l, std::size_t samples = 200, std::uint64_t seed = 0) {
    if (!l.is_square()) throw error(errc::not_square, "coordinate matrix must be square");
    if (l.rows() < 3) throw error(errc::too_small, "coordinate matrices are at least 3x3");
    const auto& d = l.field();
    if (d.is_finite()) {
        auto points = projective_points(d);
        std::rotate(points.begin(), points.end() - 1, points.end());  // infinity first
        for (const auto& p : points)
            if (!maps_into_moment_set(l, p)) return {false, p, true};
        return {true, std::nullopt, true};
    }
    std::mt19937_64 rng(seed);
    std::vector<ProjectiveParameter> points{ProjectiveParameter::infinity()};
    for (std::size_t k = 0; k < samples; ++k) points.push_back(ProjectiveParameter::finite(random_scalar(d, rng)));
    for (const auto& p : points)
        if (!maps_into_moment_set(l, p)) return {false, p, false};
    return {true, std::nullopt, false};
}

// ---------------------------------------------------------------------------
// census

struct CensusResult {
    std::uint64_t count = 0;             // brute force: coordinate vectors with rank-one matrix
    std::uint64_t parametric_count = 0;  // distinct mu h(x)
    bool sets_equal = false;
    std::vector<std::vector<std::uint64_t>> members;  // sorted residue tuples
};

namespace detail {

inline std::uint64_t checked_power(std::uint64_t base, std::size_t exponent, std::uint64_t budget) {
    std::uint64_t total = 1;
    for (std::size_t k = 0; k < exponent; ++k) {
        if (total > budget / base) return budget + 1;
        total *= base;
    }
    return total;
}

inline std::vector<Scalar> decode_residues(const FieldDescriptor& d, std::uint64_t index, std::size_t len) {
    std::vector<Scalar> out;
    out.reserve(len);
    for (std::size_t k = 0; k < len; ++k) {
        out.push_back(Scalar::residue(d, index % d.characteristic()));
        index /= d.characteristic();
    }
    std::reverse(out.begin(), out.end());  // out[0] is the most significant digit
    return out;
}

inline std::vector<std::uint64_t> residues(const std::vector<Scalar>& v) {
    std::vector<std::uint64_t> out;
    for (const auto& s : v) out.push_back(s.residue());
    return out;
}

}  // namespace detail

/// Enumerates all of GF(p)^{m+n-1}, counts rank-one Toeplitz matrices by exact
/// rank, and compares with the parametric family {mu h(x)}.
inline CensusResult rank_one_census(const FieldDescriptor& d, std::size_t m, std::size_t n, std::uint64_t budget,
                                    unsigned threads = 1) {
    if (!d.is_finite()) throw error(errc::infinite_field, "census needs a prime field");
    if (m < 1 || n < 1) throw error(errc::invalid_argument, "empty census");
    const auto p = d.characteristic();
    const auto len = m + n - 1;
    const auto total = detail::checked_power(p, len, budget);
    if (total > budget)
        throw error(errc::budget_exceeded, std::to_string(p) + "^" + std::to_string(len) + " exceeds budget " +
                                               std::to_string(budget));
    const auto per_chunk = total / p;  // chunks split on the leading coordinate

    auto chunks = parallel_chunks(p, threads, [&](std::size_t lead) {
        std::vector<std::vector<std::uint64_t>> found;
        for (std::uint64_t k = 0; k < per_chunk; ++k) {
            auto coords = detail::decode_residues(d, lead * per_chunk + k, len);
            const auto a = ToeplitzMatrix::from_coords(d, m, n, coords);
            if (exact_rank(a.dense()) == 1) found.push_back(detail::residues(coords));
        }
        return found;
    });
    CensusResult r;
    for (auto& c : chunks)
        for (auto& v : c) r.members.push_back(std::move(v));
    std::sort(r.members.begin(), r.members.end());
    r.count = r.members.size();

    std::vector<std::vector<std::uint64_t>> parametric;
    for (std::uint64_t mu = 1; mu < p; ++mu)
        for (const auto& point : projective_points(d)) {
            auto h = moment_entries(d, point, len);
            for (auto& x : h) x *= Scalar::residue(d, mu);
            parametric.push_back(detail::residues(h));
        }
    std::sort(parametric.begin(), parametric.end());
    parametric.erase(std::unique(parametric.begin(), parametric.end()), parametric.end());
    r.parametric_count = parametric.size();
    r.sets_equal = parametric == r.members;
    return r;
}

// ---------------------------------------------------------------------------
// classifier vs oracle

enum class OracleMode { Families, Random, Exhaustive };

inline std::string_view mode_tag(OracleMode m) noexcept {
    switch (m) {
        case OracleMode::Families: return "families";
        case OracleMode::Random: return "random";
        case OracleMode::Exhaustive: return "exhaustive";
    }
    return "?";
}

inline OracleMode parse_mode(std::string_view tag) {
    if (tag == "families") return OracleMode::Families;
    if (tag == "random") return OracleMode::Random;
    if (tag == "exhaustive") return OracleMode::Exhaustive;
    throw error(errc::parse_error, "unknown oracle mode '" + std::string(tag) + "'");
}

struct OracleOptions {
    OracleMode mode = OracleMode::Families;
    std::uint64_t samples = 100000;  // random mode
    std::uint64_t seed = 42;
    std::uint64_t budget = 10'000'000;
    unsigned threads = 1;
};

struct Disagreement {
    DenseMatrix l;
    PreserverVerdict classifier;
    OracleCheck oracle;
};

struct OracleReport {
    FieldDescriptor field = FieldDescriptor::rational();
    std::size_t l = 0;
    OracleMode mode = OracleMode::Families;
    std::uint64_t seed = 0;
    Regime regime = Regime::Proven;
    std::uint64_t tested = 0;
    std::uint64_t agreements = 0;
    std::vector<Disagreement> disagreements;
    std::uint64_t unexpected_not_preserver = 0;  // families mode: members the classifier rejected
    std::map<std::string, std::uint64_t> verdicts;  // classifier kind -> count
};

namespace detail {

/// Every canonical spec on the full parameter grid, in a fixed order.
inline std::vector<GeneratorSpec> family_grid(const FieldDescriptor& d) {
    const auto p = d.characteristic();
    std::vector<GeneratorSpec> specs;
    for (auto form : {PreserverForm::Vandermonde, PreserverForm::VandermondeFlip, PreserverForm::WForm})
        for (std::uint64_t g = 1; g < p; ++g)
            for (std::uint64_t r = 1; r < p; ++r)
                for (std::uint64_t a = 0; a < p; ++a) {
                    GeneratorSpec s{form, Scalar::residue(d, g), Scalar::residue(d, r), Scalar::residue(d, a), {}};
                    if (form != PreserverForm::WForm) {
                        specs.push_back(s);
                        continue;
                    }
                    for (std::uint64_t b = 0; b < p; ++b)
                        if (b != a) {
                            s.beta = Scalar::residue(d, b);
                            specs.push_back(s);
                        }
                }
    return specs;
}

/// h(x) c^T for every projective point x and every root-free functional c,
/// normalised to c_1 = 1 (other scales are the same maps up to a factor).
inline std::vector<DenseMatrix> functional_family(const FieldDescriptor& d, std::size_t l, std::uint64_t budget) {
    const auto p = d.characteristic();
    const auto middle = checked_power(p, l - 2, budget);
    if (middle * (p - 1) * (p + 1) > budget) throw error(errc::budget_exceeded, "functional family exceeds budget");
    std::vector<DenseMatrix> out;
    for (std::uint64_t mid = 0; mid < middle; ++mid)
        for (std::uint64_t last = 1; last < p; ++last) {
            std::vector<Scalar> c{Scalar::one(d)};
            auto digits = decode_residues(d, mid, l - 2);
            c.insert(c.end(), digits.begin(), digits.end());
            c.push_back(Scalar::residue(d, last));
            if (!finite_field_roots(Polynomial(d, c)).empty()) continue;
            for (const auto& point : projective_points(d)) out.push_back(outer(d, moment_entries(d, point, l), c));
        }
    return out;
}

struct ChunkResult {
    std::uint64_t tested = 0;
    std::uint64_t agreements = 0;
    std::uint64_t unexpected = 0;
    std::vector<Disagreement> disagreements;
    std::map<std::string, std::uint64_t> verdicts;
};

inline void evaluate(const DenseMatrix& l, bool expect_preserver, ChunkResult& out) {
    auto verdict = classify(l);
    auto check = direct_preserver_check(l);
    ++out.tested;
    ++out.verdicts[verdict.kind()];
    if (expect_preserver && !verdict.is_preserver()) ++out.unexpected;
    if (verdict.is_preserver() == check.preserver)
        ++out.agreements;
    else
        out.disagreements.push_back(Disagreement{l, std::move(verdict), std::move(check)});
}

}  // namespace detail

/// Runs the classifier and the direct check side by side over GF(p).
inline OracleReport compare_classifier_oracle(const FieldDescriptor& d, std::size_t l, const OracleOptions& opt) {
    if (!d.is_finite()) throw error(errc::infinite_field, "oracle comparison needs a prime field");
    if (l < 3) throw error(errc::too_small, "coordinate matrices are at least 3x3");
    const auto p = d.characteristic();
    constexpr std::size_t chunk_size = 1024;

    OracleReport report;
    report.field = d;
    report.l = l;
    report.mode = opt.mode;
    report.seed = opt.seed;
    report.regime = regime(d, l);

    std::vector<DenseMatrix> items;
    std::uint64_t total = 0;
    bool expect_preserver = false;
    switch (opt.mode) {
        case OracleMode::Families: {
            const auto grid_size = (p - 1) * (p - 1) * p * (p + 1);
            if (grid_size > opt.budget) throw error(errc::budget_exceeded, "family grid exceeds budget");
            for (const auto& spec : detail::family_grid(d)) items.push_back(coordinate_form(spec, l));
            for (auto& f : detail::functional_family(d, l, opt.budget)) items.push_back(std::move(f));
            expect_preserver = true;
            total = items.size();
            break;
        }
        case OracleMode::Random: {
            if (opt.samples > opt.budget) throw error(errc::budget_exceeded, "sample count exceeds budget");
            std::mt19937_64 rng(opt.seed);
            for (std::uint64_t k = 0; k < opt.samples; ++k) {
                std::vector<Scalar> entries;
                for (std::size_t e = 0; e < l * l; ++e) entries.push_back(Scalar::residue(d, rng() % p));
                items.emplace_back(d, l, l, std::move(entries));
            }
            total = items.size();
            break;
        }
        case OracleMode::Exhaustive:
            total = detail::checked_power(p, l * l, opt.budget);
            if (total > opt.budget)
                throw error(errc::budget_exceeded, "exhaustive enumeration of M_" + std::to_string(l) + "(" +
                                                       d.tag() + ") exceeds budget");
            break;
    }

    const auto chunks = (total + chunk_size - 1) / chunk_size;
    auto results = parallel_chunks(chunks, opt.threads, [&](std::size_t c) {
        detail::ChunkResult out;
        const auto end = std::min<std::uint64_t>(total, (c + 1) * chunk_size);
        for (std::uint64_t k = c * chunk_size; k < end; ++k) {
            if (opt.mode == OracleMode::Exhaustive)
                detail::evaluate(DenseMatrix(d, l, l, detail::decode_residues(d, k, l * l)), false, out);
            else
                detail::evaluate(items[k], expect_preserver, out);
        }
        return out;
    });
    for (auto& r : results) {
        report.tested += r.tested;
        report.agreements += r.agreements;
        report.unexpected_not_preserver += r.unexpected;
        for (auto& dis : r.disagreements) report.disagreements.push_back(std::move(dis));
        for (const auto& [k, v] : r.verdicts) report.verdicts[k] += v;
    }
    return report;
}

// ---------------------------------------------------------------------------
// rank sampling

struct RankSample {
    std::uint64_t tested = 0;
    std::uint64_t mismatches = 0;
    std::optional<ToeplitzMatrix> counterexample;
};

/// Compares rank(A) with rank(T(A)) for random m x n Toeplitz A, where T acts
/// through the coordinate matrix L.
inline RankSample sample_rank_preservation(const DenseMatrix& l, std::size_t m, std::size_t n, std::uint64_t samples,
                                           std::uint64_t seed) {
    if (l.rows() != m + n - 1) throw error(errc::length_mismatch, "L does not match m + n - 1");
    std::mt19937_64 rng(seed);
    RankSample s;
    for (std::uint64_t k = 0; k < samples; ++k) {
        const auto a = random_toeplitz(l.field(), m, n, rng);
        ++s.tested;
        if (exact_rank(a.dense()) != exact_rank(apply_coordinate_map(l, a).dense())) {
            ++s.mismatches;
            if (!s.counterexample) s.counterexample = a;
        }
    }
    return s;
}

}  // namespace tpres
