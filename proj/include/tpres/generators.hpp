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
 * The explicit matrices behind rank-one preservers and their assembly into
 * maps A -> M A N on m x n Toeplitz matrices.
 *
 *     F_n        anti-diagonal permutation
 *     D_n(r)     diag(1, r, ..., r^{n-1})
 *     Z_n        lower shift
 *     J_a        a I + Z_n
 *     V_n(a)     confluent Vandermonde, column j = J_a^{j-1} e_1
 *     W_n(a, b)  column j = J_b^{n-j} J_a^{j-1} e_1
 *
 * For a spec (form, gamma, r, a, b) the right factor of size k is
 *
 *     Vandermonde      N_k = V_k(a) D_k(r)
 *     VandermondeFlip  N_k = V_k(a) F_k D_k(r)
 *     WForm            N_k = W_k(a, b) D_k(r)
 *
 * and the map is A -> gamma F_m N_m^T F_m A N_n. Its coordinate matrix L
 * satisfies L^T = gamma N_l with l = m + n - 1.
 */

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "moment.hpp"
#include "structmat.hpp"

namespace tpres {

inline DenseMatrix flip(const FieldDescriptor& d, std::size_t n) {
    DenseMatrix f(d, n, n);
    for (std::size_t i = 0; i < n; ++i) f(i, n - 1 - i) = Scalar::one(d);
    return f;
}

inline DenseMatrix diag_powers(const Scalar& r, std::size_t n) {
    if (r.is_zero()) throw error(errc::zero_ratio, "D_n(0) is not allowed");
    DenseMatrix m(r.field(), n, n);
    Scalar power = Scalar::one(r.field());
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = power;
        power *= r;
    }
    return m;
}

inline DenseMatrix lower_shift(const FieldDescriptor& d, std::size_t n) {
    DenseMatrix z(d, n, n);
    for (std::size_t i = 1; i < n; ++i) z(i, i - 1) = Scalar::one(d);
    return z;
}

inline DenseMatrix jordan(const Scalar& alpha, std::size_t n) {
    DenseMatrix j = lower_shift(alpha.field(), n);
    for (std::size_t i = 0; i < n; ++i) j(i, i) = alpha;
    return j;
}

namespace detail {

/// J_a v without forming J_a.
inline std::vector<Scalar> apply_jordan(const Scalar& alpha, const std::vector<Scalar>& v) {
    std::vector<Scalar> out(v.size(), Scalar::zero(alpha.field()));
    for (std::size_t i = 0; i < v.size(); ++i) {
        out[i] = alpha * v[i];
        if (i > 0) out[i] += v[i - 1];
    }
    return out;
}

inline std::vector<Scalar> unit(const FieldDescriptor& d, std::size_t n, std::size_t k) {
    std::vector<Scalar> e(n, Scalar::zero(d));
    e[k] = Scalar::one(d);
    return e;
}

}  // namespace detail

inline DenseMatrix confluent_vandermonde(const Scalar& alpha, std::size_t n) {
    const auto& d = alpha.field();
    DenseMatrix v(d, n, n);
    if (n == 0) return v;
    auto column = detail::unit(d, n, 0);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < n; ++i) v(i, j) = column[i];
        column = detail::apply_jordan(alpha, column);
    }
    return v;
}

inline DenseMatrix w_matrix(const Scalar& alpha, const Scalar& beta, std::size_t n) {
    const auto& d = alpha.field();
    DenseMatrix w(d, n, n);
    for (std::size_t j = 0; j < n; ++j) {
        auto column = detail::unit(d, n, 0);
        for (std::size_t k = 0; k < j; ++k) column = detail::apply_jordan(alpha, column);
        for (std::size_t k = 0; k + 1 + j < n; ++k) column = detail::apply_jordan(beta, column);
        for (std::size_t i = 0; i < n; ++i) w(i, j) = column[i];
    }
    return w;
}

// ---------------------------------------------------------------------------
// preserver specs

enum class PreserverForm { Vandermonde, VandermondeFlip, WForm };

inline std::string_view form_tag(PreserverForm f) noexcept {
    switch (f) {
        case PreserverForm::Vandermonde: return "v";
        case PreserverForm::VandermondeFlip: return "vf";
        case PreserverForm::WForm: return "w";
    }
    return "?";
}

inline PreserverForm parse_form(std::string_view tag) {
    if (tag == "v") return PreserverForm::Vandermonde;
    if (tag == "vf") return PreserverForm::VandermondeFlip;
    if (tag == "w") return PreserverForm::WForm;
    throw error(errc::parse_error, "unknown preserver form '" + std::string(tag) + "'");
}

struct GeneratorSpec {
    PreserverForm form = PreserverForm::Vandermonde;
    Scalar gamma;
    Scalar r;
    Scalar alpha;
    std::optional<Scalar> beta;  // WForm only

    const FieldDescriptor& field() const noexcept { return gamma.field(); }

    void validate() const {
        if (!(r.field() == gamma.field()) || !(alpha.field() == gamma.field()) ||
            (beta && !(beta->field() == gamma.field())))
            throw error(errc::field_mismatch, "spec parameters in different fields");
        if (gamma.is_zero()) throw error(errc::invalid_spec, "gamma must be nonzero");
        if (r.is_zero()) throw error(errc::invalid_spec, "r must be nonzero");
        if (form == PreserverForm::WForm) {
            if (!beta) throw error(errc::invalid_spec, "W form needs beta");
            if (*beta == alpha) throw error(errc::invalid_spec, "W form needs alpha != beta");
        }
    }

    friend bool operator==(const GeneratorSpec& a, const GeneratorSpec& b) {
        if (a.form != b.form || !(a.field() == b.field())) return false;
        if (a.gamma != b.gamma || a.r != b.r || a.alpha != b.alpha) return false;
        if (a.form != PreserverForm::WForm) return true;
        return a.beta.has_value() == b.beta.has_value() && (!a.beta || *a.beta == *b.beta);
    }
};

/// N_k for `spec`, k x k.
inline DenseMatrix right_factor(const GeneratorSpec& spec, std::size_t k) {
    spec.validate();
    const auto& d = spec.field();
    switch (spec.form) {
        case PreserverForm::Vandermonde: return confluent_vandermonde(spec.alpha, k) * diag_powers(spec.r, k);
        case PreserverForm::VandermondeFlip:
            return confluent_vandermonde(spec.alpha, k) * flip(d, k) * diag_powers(spec.r, k);
        case PreserverForm::WForm: return w_matrix(spec.alpha, *spec.beta, k) * diag_powers(spec.r, k);
    }
    throw error(errc::invalid_spec, "unknown form");
}

/// Closed-form coordinate matrix: L = gamma N_l^T.
inline DenseMatrix coordinate_form(const GeneratorSpec& spec, std::size_t l) {
    return right_factor(spec, l).transpose().scale(spec.gamma);
}

/// A -> left * A * right.
struct PreserverPair {
    DenseMatrix left;
    DenseMatrix right;
    GeneratorSpec spec;

    DenseMatrix apply(const DenseMatrix& a) const { return left * a * right; }
};

inline PreserverPair build_preserver(const GeneratorSpec& spec, std::size_t m, std::size_t n) {
    spec.validate();
    if (m < 2 || m > n) throw error(errc::invalid_argument, "need 2 <= m <= n");
    const auto& d = spec.field();
    DenseMatrix left = (flip(d, m) * right_factor(spec, m).transpose() * flip(d, m)).scale(spec.gamma);
    return PreserverPair{std::move(left), right_factor(spec, n), spec};
}

/// Coordinate matrix of A -> left * A * right on Toeplitz matrices, by
/// applying the map to each basis element. Throws not_toeplitz_closed if an
/// image leaves the Toeplitz space.
inline DenseMatrix induced_coordinate_matrix(const DenseMatrix& left, const DenseMatrix& right) {
    if (!left.is_square() || !right.is_square()) throw error(errc::not_square, "factors must be square");
    const auto& d = left.field();
    const auto m = left.rows(), n = right.rows();
    const auto l = m + n - 1;
    DenseMatrix coord(d, l, l);
    for (std::size_t k = 0; k < l; ++k) {
        const auto basis = ToeplitzMatrix::from_coords(d, m, n, detail::unit(d, l, k));
        const DenseMatrix image = left * basis.dense() * right;
        if (!is_toeplitz(image))
            throw error(errc::not_toeplitz_closed, "image of basis element " + std::to_string(k) + " is not Toeplitz");
        const auto c = ToeplitzMatrix::from_dense(image).coords();
        for (std::size_t i = 0; i < l; ++i) coord(i, k) = c[i];
    }
    return coord;
}

inline DenseMatrix induced_coordinate_matrix(const PreserverPair& p) {
    return induced_coordinate_matrix(p.left, p.right);
}

/// The same map transported to Hankel matrices: H -> F_m left F_m H right,
/// which for square specs is gamma N^T H N.
inline PreserverPair hankel_pair(const PreserverPair& p) {
    const auto& d = p.left.field();
    const auto m = p.left.rows();
    return PreserverPair{flip(d, m) * p.left * flip(d, m), p.right, p.spec};
}

/// Coordinate matrix of H -> left * H * right on Hankel matrices (Hankel
/// coordinates H(i,j) = c[i+j]).
inline DenseMatrix induced_hankel_coordinate_matrix(const DenseMatrix& left, const DenseMatrix& right) {
    const auto& d = left.field();
    const auto m = left.rows(), n = right.rows();
    const auto l = m + n - 1;
    DenseMatrix coord(d, l, l);
    for (std::size_t k = 0; k < l; ++k) {
        const auto basis = HankelMatrix::from_coords(d, m, n, detail::unit(d, l, k));
        const DenseMatrix image = left * basis.dense() * right;
        if (!is_hankel(image))
            throw error(errc::not_toeplitz_closed, "image of basis element " + std::to_string(k) + " is not Hankel");
        const auto c = HankelMatrix::from_dense(image).coords();
        for (std::size_t i = 0; i < l; ++i) coord(i, k) = c[i];
    }
    return coord;
}

}  // namespace tpres
