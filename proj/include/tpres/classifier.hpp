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
 * Classification of coordinate matrices L (l x l, l = m + n - 1) of linear
 * maps on Toeplitz matrices that send rank-one matrices to rank-one matrices.
 *
 * Row j of L read as a polynomial P_j(x) = sum_k L(j,k) x^k gives
 * L h(x) = [P_1(x), ..., P_l(x)]. A preserver is either
 *
 *   - invertible, with P_j = gamma r^{j-1} times one of
 *         (x+a)^{j-1}                      ascending degrees   -> "v"
 *         (x+a)^{l-j}                      descending degrees  -> "vf"
 *         (x+a)^{j-1} (x+b)^{l-j}, a != b  constant degree     -> "w"
 *   - or rank one, L = h c^T with h in R and sum_j c_j x^{j-1} free of roots
 *     (possible over the reals and over some finite fields, never over C).
 *
 * Recovered parameters are never trusted on their own: the canonical L is
 * rebuilt from them and compared entry by entry.
 */

#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "generators.hpp"
#include "moment.hpp"
#include "poly.hpp"
#include "structmat.hpp"

namespace tpres {

struct NotPreserver {
    std::optional<ProjectiveParameter> witness;  // L h(witness) is not in R
};

struct Canonical {
    GeneratorSpec spec;
};

struct RankOneFunctional {
    MomentVector h;         // unit scale
    std::vector<Scalar> c;  // L = h c^T
};

class PreserverVerdict {
   public:
    using Alternatives = std::variant<NotPreserver, Canonical, RankOneFunctional>;

    PreserverVerdict(NotPreserver v) : value_(std::move(v)) {}
    PreserverVerdict(Canonical v) : value_(std::move(v)) {}
    PreserverVerdict(RankOneFunctional v) : value_(std::move(v)) {}

    bool is_preserver() const noexcept { return !std::holds_alternative<NotPreserver>(value_); }
    bool is_canonical() const noexcept { return std::holds_alternative<Canonical>(value_); }
    bool is_rank_one_functional() const noexcept { return std::holds_alternative<RankOneFunctional>(value_); }

    const NotPreserver& not_preserver() const { return std::get<NotPreserver>(value_); }
    const Canonical& canonical() const { return std::get<Canonical>(value_); }
    const RankOneFunctional& rank_one_functional() const { return std::get<RankOneFunctional>(value_); }
    const Alternatives& value() const noexcept { return value_; }

    /// "v" | "vf" | "w" | "rank-one-functional" | "none"
    std::string kind() const {
        if (is_canonical()) return std::string(form_tag(canonical().spec.form));
        if (is_rank_one_functional()) return "rank-one-functional";
        return "none";
    }

   private:
    Alternatives value_;
};

enum class Regime { Proven, SmallField };

inline std::string_view regime_tag(Regime r) noexcept { return r == Regime::Proven ? "proven" : "small-field"; }

/// Fields with at least l^2 + 1 elements (l = 2n - 1 in the square case) are
/// covered by the classification argument; smaller prime fields are not.
inline Regime regime(const FieldDescriptor& d, std::size_t l) {
    if (!d.is_finite()) return Regime::Proven;
    return d.characteristic() >= l * l + 1 ? Regime::Proven : Regime::SmallField;
}

// ---------------------------------------------------------------------------
// row polynomials

struct RowPolynomialProfile {
    std::vector<Polynomial> polynomials;  // P_1 ... P_l
    std::vector<Scalar> leading;          // gamma_j (zero for a zero row)
    std::vector<int> degrees;             // -1 for a zero row
};

inline RowPolynomialProfile row_profile(const DenseMatrix& l) {
    RowPolynomialProfile p;
    for (std::size_t i = 0; i < l.rows(); ++i) {
        Polynomial poly(l.field(), l.row(i));
        p.leading.push_back(poly.is_zero() ? Scalar::zero(l.field()) : poly.lead());
        p.degrees.push_back(poly.degree());
        p.polynomials.push_back(std::move(poly));
    }
    return p;
}

/// P_{j-1} P_{j+1} = P_j^2 for every interior j.
inline bool adjacent_identities_hold(const RowPolynomialProfile& p) {
    for (std::size_t j = 1; j + 1 < p.polynomials.size(); ++j)
        if (p.polynomials[j - 1] * p.polynomials[j + 1] != p.polynomials[j] * p.polynomials[j]) return false;
    return true;
}

/// Image of a Toeplitz matrix under the coordinate map L.
inline ToeplitzMatrix apply_coordinate_map(const DenseMatrix& l, const ToeplitzMatrix& a) {
    return ToeplitzMatrix::from_coords(a.field(), a.rows(), a.cols(), l.apply(a.coords()));
}

inline bool maps_into_moment_set(const DenseMatrix& l, const ProjectiveParameter& p) {
    return moment_membership(l.apply(moment_entries(l.field(), p, l.cols()))).has_value();
}

namespace detail {

inline std::optional<LinearPowerForm> linear_power(const Polynomial& p) {
    try {
        return extract_linear_power(p);
    } catch (const error& e) {
        if (e.code() != errc::characteristic_too_small) throw;
        return extract_linear_power_by_roots(p);
    }
}

/// Small candidate points tried as witnesses over infinite fields.
inline std::vector<ProjectiveParameter> witness_candidates(const FieldDescriptor& d, std::size_t l) {
    std::vector<ProjectiveParameter> out{ProjectiveParameter::infinity()};
    if (d.is_finite()) {
        for (std::uint64_t v = 0; v < d.characteristic(); ++v)
            out.push_back(ProjectiveParameter::finite(Scalar::residue(d, v)));
        return out;
    }
    // A non-preserving L has a nonzero 2x2-minor polynomial of degree at most
    // 2(l-1), so 4l integer points are more than enough.
    const auto reach = static_cast<long long>(2 * l + 2);
    out.push_back(ProjectiveParameter::finite(Scalar::zero(d)));
    for (long long k = 1; k <= reach; ++k) {
        out.push_back(ProjectiveParameter::finite(Scalar::from_int(d, k)));
        out.push_back(ProjectiveParameter::finite(Scalar::from_int(d, -k)));
    }
    if (d.kind() == FieldKind::GaussianRational)
        for (long long a = -3; a <= 3; ++a)
            for (long long b = -3; b <= 3; ++b)
                if (b != 0) out.push_back(ProjectiveParameter::finite(Scalar::gaussian(mpq_class(static_cast<long>(a)), mpq_class(static_cast<long>(b)))));
    return out;
}

inline std::vector<mpz_class> divisors(const mpz_class& value) {
    const mpz_class v = abs(value);
    std::vector<mpz_class> out;
    if (v == 0 || v > mpz_class("1000000000000")) return out;  // too large to factor by trial division
    for (mpz_class k = 1; k * k <= v; ++k)
        if (v % k == 0) {
            out.push_back(k);
            if (k * k != v) out.push_back(v / k);
        }
    return out;
}

/// Rational roots by the rational root theorem (bounded coefficients only).
inline std::vector<Scalar> rational_roots(const Polynomial& p) {
    std::vector<Scalar> roots;
    if (p.degree() < 1) return roots;
    mpz_class lcm_den = 1;
    for (const auto& c : p.coeffs()) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.rational().get_den_mpz_t());
    std::vector<mpz_class> ints;
    for (const auto& c : p.coeffs()) ints.emplace_back(c.rational().get_num() * (lcm_den / c.rational().get_den()));
    std::size_t low = 0;
    while (ints[low] == 0) ++low;
    if (low > 0) roots.push_back(Scalar::zero(p.field()));
    for (const auto& num : divisors(ints[low]))
        for (const auto& den : divisors(ints.back()))
            for (int s : {1, -1}) {
                Scalar x = Scalar::from_rational(p.field(), mpq_class(s * num, den));
                if (p(x).is_zero() &&
                    std::find(roots.begin(), roots.end(), x) == roots.end())
                    roots.push_back(x);
            }
    return roots;
}

inline std::optional<ProjectiveParameter> find_witness(const DenseMatrix& l) {
    for (const auto& p : witness_candidates(l.field(), l.rows()))
        if (!maps_into_moment_set(l, p)) return p;
    return std::nullopt;
}

inline PreserverVerdict classify_rank_one(const DenseMatrix& l) {
    const auto& d = l.field();
    const auto size = l.rows();
    std::size_t i0 = 0, j0 = 0;
    for (std::size_t k = 0; k < l.entries().size(); ++k)
        if (!l.entries()[k].is_zero()) {
            i0 = k / size;
            j0 = k % size;
            break;
        }
    const auto b = l.col(j0);
    auto c = l.row(i0);
    const Scalar pivot_inv = l(i0, j0).inv();
    for (auto& x : c) x *= pivot_inv;

    const auto member = moment_membership(b);
    if (!member) return NotPreserver{find_witness(l)};
    for (auto& x : c) x *= member->scale;  // L = h(param) c^T

    if (c.front().is_zero()) return NotPreserver{ProjectiveParameter::finite(Scalar::zero(d))};
    if (c.back().is_zero()) return NotPreserver{ProjectiveParameter::infinity()};

    const Polynomial functional(d, c);
    auto functional_verdict = [&] {
        return RankOneFunctional{moment_vector(member->parameter, Scalar::one(d), size), c};
    };
    switch (d.kind()) {
        case FieldKind::Rational: {
            if (real_root_count(functional) == 0) return PreserverVerdict(functional_verdict());
            const auto roots = rational_roots(functional);
            if (roots.empty()) return NotPreserver{std::nullopt};  // only irrational real roots
            return NotPreserver{ProjectiveParameter::finite(roots.front())};
        }
        case FieldKind::GaussianRational:
            // a polynomial of positive degree always has a complex root
            return NotPreserver{find_witness(l)};
        case FieldKind::PrimeField: {
            const auto roots = finite_field_roots(functional);
            if (roots.empty()) return PreserverVerdict(functional_verdict());
            return NotPreserver{ProjectiveParameter::finite(roots.front())};
        }
    }
    return NotPreserver{std::nullopt};
}

inline std::optional<GeneratorSpec> recover_spec(const RowPolynomialProfile& p) {
    const auto size = p.polynomials.size();
    const auto& d = p.polynomials.front().field();
    for (std::size_t j = 0; j + 2 < size; ++j)
        if (p.leading[j] * p.leading[j + 2] != p.leading[j + 1] * p.leading[j + 1]) return std::nullopt;

    bool ascending = true, descending = true, constant = true;
    for (std::size_t j = 0; j < size; ++j) {
        const int deg = p.degrees[j];
        ascending = ascending && deg == static_cast<int>(j);
        descending = descending && deg == static_cast<int>(size - 1 - j);
        constant = constant && deg == static_cast<int>(size - 1);
    }

    GeneratorSpec spec;
    spec.gamma = p.leading[0];
    spec.r = p.leading[1] / p.leading[0];
    spec.alpha = Scalar::zero(d);
    if (ascending || descending) {
        // the degree-one row is gamma r^k (x + a)
        const Polynomial& linear = ascending ? p.polynomials[1] : p.polynomials[size - 2];
        spec.form = ascending ? PreserverForm::Vandermonde : PreserverForm::VandermondeFlip;
        spec.alpha = linear.coeff(0) / linear.lead();
        return spec;
    }
    if (constant) {
        const auto first = linear_power(p.polynomials.front());
        const auto last = linear_power(p.polynomials.back());
        if (!first || !last) return std::nullopt;
        if (first->root_shift == last->root_shift) return std::nullopt;
        spec.form = PreserverForm::WForm;
        spec.beta = first->root_shift;
        spec.alpha = last->root_shift;
        return spec;
    }
    return std::nullopt;
}

inline PreserverVerdict classify_invertible(const DenseMatrix& l) {
    const auto profile = row_profile(l);
    if (!adjacent_identities_hold(profile)) return NotPreserver{find_witness(l)};
    const auto spec = recover_spec(profile);
    if (!spec || coordinate_form(*spec, l.rows()) != l) return NotPreserver{find_witness(l)};
    return Canonical{*spec};
}

}  // namespace detail

/// Decides whether L maps R into R and recovers canonical parameters.
inline PreserverVerdict classify(const DenseMatrix& l) {
    if (!l.is_square()) throw error(errc::not_square, "coordinate matrix must be square");
    if (l.rows() < 3) throw error(errc::too_small, "coordinate matrices are at least 3x3");
    if (l.is_zero()) return NotPreserver{ProjectiveParameter::finite(Scalar::zero(l.field()))};
    const auto rank = exact_rank(l);
    if (rank == 1) return detail::classify_rank_one(l);
    if (rank == l.rows()) return detail::classify_invertible(l);
    return NotPreserver{detail::find_witness(l)};
}

/// Rebuilds the coordinate matrix a preserving verdict describes.
inline DenseMatrix reconstruct(const PreserverVerdict& v, std::size_t l) {
    if (v.is_canonical()) return coordinate_form(v.canonical().spec, l);
    if (v.is_rank_one_functional()) {
        const auto& f = v.rank_one_functional();
        return outer(f.c.front().field(), f.h.entries, f.c);
    }
    throw error(errc::not_canonical, "no matrix to rebuild for a non-preserver");
}

// ---------------------------------------------------------------------------
// refinements

struct DeterminantReport {
    bool preserver;
    Scalar det_product;        // det(M) det(N)
    Scalar gamma_r_factor;     // gamma^n r^{n(n-1)}
    Scalar alpha_beta_factor;  // (alpha - beta)^{n(n-1)} for W, else 1
};

inline DeterminantReport is_determinant_preserver(const GeneratorSpec& spec, std::size_t n) {
    const auto pair = build_preserver(spec, n, n);
    const auto& d = spec.field();
    const auto e = static_cast<long long>(n * (n - 1));
    DeterminantReport r{false, exact_det(pair.left) * exact_det(pair.right),
                        spec.gamma.pow(static_cast<long long>(n)) * spec.r.pow(e), Scalar::one(d)};
    if (spec.form == PreserverForm::WForm) r.alpha_beta_factor = (spec.alpha - *spec.beta).pow(e);
    r.preserver = r.det_product.is_one();
    return r;
}

inline DeterminantReport is_determinant_preserver(const PreserverVerdict& v, std::size_t n) {
    if (!v.is_canonical()) throw error(errc::not_canonical, "determinant check needs a canonical verdict");
    return is_determinant_preserver(v.canonical().spec, n);
}

/// L maps R onto R.
inline bool is_strong_preserver(const DenseMatrix& l) {
    if (!l.is_square() || l.rows() < 3) return false;
    if (!classify(l).is_canonical()) return false;
    if (!classify(exact_inverse(l)).is_canonical()) return false;
    if (!l.field().is_finite()) return true;

    // over GF(p) the p+1 projective points must be permuted
    const auto& d = l.field();
    const auto p = d.characteristic();
    std::vector<bool> hit(p + 1, false);
    for (std::uint64_t k = 0; k <= p; ++k) {
        const auto point = k == p ? ProjectiveParameter::infinity()
                                  : ProjectiveParameter::finite(Scalar::residue(d, k));
        const auto image = moment_membership(l.apply(moment_entries(d, point, l.rows())));
        if (!image) return false;
        const auto slot = image->parameter.is_infinite() ? p : image->parameter.value().residue();
        if (hit[slot]) return false;
        hit[slot] = true;
    }
    return true;
}

/// Rank preservers on n x n Toeplitz matrices are exactly the canonical forms.
inline bool is_rank_preserver(const DenseMatrix& l, std::size_t n) {
    if (!l.is_square() || l.rows() != 2 * n - 1) throw error(errc::length_mismatch, "need l = 2n - 1");
    return classify(l).is_canonical();
}

// ---------------------------------------------------------------------------
// maps from Toeplitz matrices to general matrices

struct TargetReport {
    bool preserver;
    std::optional<Polynomial> u_gcd;  // nullopt when u vanishes identically
    std::optional<Polynomial> v_gcd;
    bool u_nonvanishing;
    bool v_nonvanishing;
    bool infinity_ok;  // M e_1 != 0 and e_n^T N != 0
    bool size_two;  // n == 2
};

namespace detail {

inline std::optional<Polynomial> gcd_all(const std::vector<Polynomial>& ps) {
    std::optional<Polynomial> g;
    for (const auto& p : ps) {
        if (p.is_zero()) continue;
        g = g ? gcd(*g, p) : p.monic();
    }
    return g;
}

/// Whether g has a root in the field (real closure for q, algebraic closure for qi).
inline bool has_root(const Polynomial& g) {
    if (g.degree() < 1) return false;
    switch (g.field().kind()) {
        case FieldKind::Rational: return real_root_count(g) > 0;
        case FieldKind::GaussianRational: return true;
        case FieldKind::PrimeField: return !finite_field_roots(g).empty();
    }
    return true;
}

}  // namespace detail

/// Does A -> M A N send rank-one Toeplitz matrices to rank-one matrices?
inline TargetReport verify_general_target(const DenseMatrix& m, const DenseMatrix& n) {
    if (!m.is_square() || !n.is_square()) throw error(errc::not_square, "M and N must be square");
    if (m.rows() != n.rows()) throw error(errc::length_mismatch, "M and N must have the same size");
    const auto& d = m.field();
    const auto size = m.rows();

    // u_i(x) = sum_j M(i,j) x^{n-1-j},  v_j(x) = sum_i x^i N(i,j)
    std::vector<Polynomial> u, v;
    for (std::size_t i = 0; i < size; ++i) {
        auto row = m.row(i);
        std::reverse(row.begin(), row.end());
        u.emplace_back(d, std::move(row));
        v.emplace_back(d, n.col(i));
    }
    TargetReport r{false, detail::gcd_all(u), detail::gcd_all(v), false, false, false, size == 2};
    r.u_nonvanishing = r.u_gcd && !detail::has_root(*r.u_gcd);
    r.v_nonvanishing = r.v_gcd && !detail::has_root(*r.v_gcd);
    bool left_inf = false, right_inf = false;
    for (std::size_t i = 0; i < size; ++i) {
        left_inf = left_inf || !m(i, 0).is_zero();
        right_inf = right_inf || !n(size - 1, i).is_zero();
    }
    r.infinity_ok = left_inf && right_inf;
    r.preserver = r.u_nonvanishing && r.v_nonvanishing && r.infinity_ok;
    return r;
}

}  // namespace tpres
