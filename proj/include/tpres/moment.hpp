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
 * Moment vectors h(x) = [1, x, ..., x^{l-1}] and h(inf) = [0, ..., 0, 1]: the
 * coordinate images of rank-one Toeplitz matrices. The set R of their nonzero
 * multiples is exactly the set of nonzero vectors v whose two-row window
 *
 *     [ v_1 ... v_{l-1} ]
 *     [ v_2 ... v_l     ]
 *
 * has rank one. Adjacent minors alone do not suffice: [1,0,0,0,1] passes
 * every v_j^2 = v_{j-1} v_{j+1} test and still has a rank-two Toeplitz matrix.
 */

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "structmat.hpp"

namespace tpres {

/// A point of F u {inf}.
class ProjectiveParameter {
   public:
    static ProjectiveParameter finite(Scalar x) { return ProjectiveParameter(std::move(x)); }
    static ProjectiveParameter infinity() { return ProjectiveParameter(); }

    bool is_infinite() const noexcept { return !value_.has_value(); }
    const Scalar& value() const {
        if (!value_) throw error(errc::invalid_argument, "infinite parameter has no finite value");
        return *value_;
    }

    friend bool operator==(const ProjectiveParameter& a, const ProjectiveParameter& b) {
        if (a.is_infinite() || b.is_infinite()) return a.is_infinite() == b.is_infinite();
        return *a.value_ == *b.value_;
    }
    friend bool operator!=(const ProjectiveParameter& a, const ProjectiveParameter& b) { return !(a == b); }

   private:
    ProjectiveParameter() = default;
    explicit ProjectiveParameter(Scalar x) : value_(std::move(x)) {}

    std::optional<Scalar> value_;
};

/// Scalar token or "inf".
inline std::string format_parameter(const ProjectiveParameter& p) {
    return p.is_infinite() ? std::string("inf") : format_scalar(p.value());
}

inline ProjectiveParameter parse_parameter(std::string_view tok, const FieldDescriptor& d) {
    if (tok == "inf") return ProjectiveParameter::infinity();
    return ProjectiveParameter::finite(parse_scalar(tok, d));
}

/// [1, x, ..., x^{len-1}] or [0, ..., 0, 1], unscaled.
inline std::vector<Scalar> moment_entries(const FieldDescriptor& d, const ProjectiveParameter& p, std::size_t len) {
    std::vector<Scalar> v(len, Scalar::zero(d));
    if (len == 0) return v;
    if (p.is_infinite()) {
        v.back() = Scalar::one(d);
        return v;
    }
    Scalar power = Scalar::one(d);
    for (std::size_t k = 0; k < len; ++k) {
        v[k] = power;
        power *= p.value();
    }
    return v;
}

struct MomentVector {
    Scalar scale;
    ProjectiveParameter parameter;
    std::vector<Scalar> entries;

    std::size_t size() const noexcept { return entries.size(); }
};

inline MomentVector moment_vector(const ProjectiveParameter& p, const Scalar& scale, std::size_t len) {
    if (scale.is_zero()) throw error(errc::zero_scale, "moment vector with zero scale");
    if (len < 3) throw error(errc::too_small, "moment vectors have length at least 3");
    auto entries = moment_entries(scale.field(), p, len);
    for (auto& e : entries) e *= scale;
    return MomentVector{scale, p, std::move(entries)};
}

struct RankOneFactorization {
    Scalar scale;
    ProjectiveParameter parameter;
};

/// Decides v in R. On success v = scale * h(parameter).
inline std::optional<RankOneFactorization> moment_membership(std::span<const Scalar> v) {
    const auto len = v.size();
    if (len < 3) throw error(errc::too_small, "membership needs length at least 3");
    bool nonzero = false;
    for (const auto& x : v) nonzero = nonzero || !x.is_zero();
    if (!nonzero) return std::nullopt;

    // every 2x2 minor of the window matrix: v_i v_{j+1} = v_{i+1} v_j, i < j
    for (std::size_t i = 0; i + 1 < len; ++i)
        for (std::size_t j = i + 1; j + 1 < len; ++j)
            if (v[i] * v[j + 1] != v[i + 1] * v[j]) return std::nullopt;

    const auto& d = v[0].field();
    RankOneFactorization f = v[0].is_zero()
                                 ? RankOneFactorization{v[len - 1], ProjectiveParameter::infinity()}
                                 : RankOneFactorization{v[0], ProjectiveParameter::finite(v[1] / v[0])};
    // certify by re-expansion
    const auto h = moment_entries(d, f.parameter, len);
    for (std::size_t k = 0; k < len; ++k)
        if (h[k] * f.scale != v[k]) return std::nullopt;
    return f;
}

/// X_x = [x^{m-1}, ..., 1]^T [1, ..., x^{n-1}], or e_1 e_n^T for x = inf.
inline ToeplitzMatrix rank_one_generator(const FieldDescriptor& d, const ProjectiveParameter& p, std::size_t m,
                                         std::size_t n) {
    if (m < 2 || n < 2) throw error(errc::too_small, "rank-one generators need m, n >= 2");
    return ToeplitzMatrix::from_coords(d, m, n, moment_entries(d, p, m + n - 1));
}

inline ToeplitzMatrix reconstruct(const RankOneFactorization& f, std::size_t m, std::size_t n) {
    auto coords = moment_entries(f.scale.field(), f.parameter, m + n - 1);
    for (auto& c : coords) c *= f.scale;
    return ToeplitzMatrix::from_coords(f.scale.field(), m, n, std::move(coords));
}

/// Succeeds iff dense(a) has rank one.
inline std::optional<RankOneFactorization> rank_one_toeplitz_factor(const ToeplitzMatrix& a) {
    if (a.rows() < 2 || a.cols() < 2) throw error(errc::too_small, "rank-one factorization needs m, n >= 2");
    return moment_membership(a.coords());
}

}  // namespace tpres
