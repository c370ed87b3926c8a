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

#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "scalar.hpp"

namespace tpres {

/// Dense univariate polynomial; coeffs()[k] is the coefficient of x^k.
/// The zero polynomial has no coefficients and degree -1.
class Polynomial {
   public:
    explicit Polynomial(const FieldDescriptor& d) : field_(d) {}

    Polynomial(const FieldDescriptor& d, std::vector<Scalar> coeffs) : field_(d), coeffs_(std::move(coeffs)) {
        for (const auto& c : coeffs_)
            if (!(c.field() == field_)) throw error(errc::field_mismatch, "coefficient outside " + d.tag());
        trim();
    }

    static Polynomial constant(const Scalar& c) { return Polynomial(c.field(), {c}); }

    static Polynomial monomial(const Scalar& c, std::size_t k) {
        std::vector<Scalar> v(k + 1, Scalar::zero(c.field()));
        v[k] = c;
        return Polynomial(c.field(), std::move(v));
    }

    /// x + a
    static Polynomial linear(const Scalar& a) { return Polynomial(a.field(), {a, Scalar::one(a.field())}); }

    const FieldDescriptor& field() const noexcept { return field_; }
    const std::vector<Scalar>& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

    Scalar coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Scalar::zero(field_); }

    const Scalar& lead() const {
        if (is_zero()) throw error(errc::zero_polynomial, "leading coefficient of zero");
        return coeffs_.back();
    }

    /// Horner evaluation.
    Scalar operator()(const Scalar& x) const {
        Scalar acc = Scalar::zero(field_);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            acc *= x;
            acc += *it;
        }
        return acc;
    }

    Polynomial scale(const Scalar& c) const {
        std::vector<Scalar> v = coeffs_;
        for (auto& x : v) x *= c;
        return Polynomial(field_, std::move(v));
    }

    Polynomial monic() const { return scale(lead().inv()); }

    Polynomial derivative() const {
        std::vector<Scalar> v;
        for (std::size_t k = 1; k < coeffs_.size(); ++k)
            v.push_back(coeffs_[k] * Scalar::from_int(field_, static_cast<long long>(k)));
        return Polynomial(field_, std::move(v));
    }

    Polynomial pow(unsigned k) const {
        Polynomial result = constant(Scalar::one(field_));
        for (unsigned i = 0; i < k; ++i) result = result * *this;
        return result;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        a.check_same(b);
        std::vector<Scalar> v(std::max(a.coeffs_.size(), b.coeffs_.size()), Scalar::zero(a.field_));
        for (std::size_t k = 0; k < a.coeffs_.size(); ++k) v[k] += a.coeffs_[k];
        for (std::size_t k = 0; k < b.coeffs_.size(); ++k) v[k] += b.coeffs_[k];
        return Polynomial(a.field_, std::move(v));
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        return a + b.scale(-Scalar::one(b.field_));
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        a.check_same(b);
        if (a.is_zero() || b.is_zero()) return Polynomial(a.field_);
        std::vector<Scalar> v(a.coeffs_.size() + b.coeffs_.size() - 1, Scalar::zero(a.field_));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return Polynomial(a.field_, std::move(v));
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        a.check_same(b);
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

   private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

    void check_same(const Polynomial& b) const {
        if (!(field_ == b.field_)) throw error(errc::field_mismatch, field_.tag() + " vs " + b.field_.tag());
    }

    FieldDescriptor field_;
    std::vector<Scalar> coeffs_;
};

/// Euclidean division a = q*b + r with deg r < deg b.
inline std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw error(errc::division_by_zero, "polynomial division by zero");
    if (!(a.field() == b.field())) throw error(errc::field_mismatch, "polynomial division");
    const auto& d = a.field();
    std::vector<Scalar> rem = a.coeffs();
    const int db = b.degree();
    const Scalar inv_lead = b.lead().inv();
    std::vector<Scalar> quot(a.degree() >= db ? static_cast<std::size_t>(a.degree() - db + 1) : 0,
                             Scalar::zero(d));
    for (int k = a.degree(); k >= db; --k) {
        const Scalar c = rem[k] * inv_lead;
        if (c.is_zero()) continue;
        quot[k - db] = c;
        for (int j = 0; j <= db; ++j) rem[k - db + j] -= c * b.coeffs()[j];
    }
    return {Polynomial(d, std::move(quot)), Polynomial(d, std::move(rem))};
}

/// Monic gcd; gcd(p, 0) = monic(p).
inline Polynomial gcd(Polynomial a, Polynomial b) {
    if (a.is_zero() && b.is_zero()) throw error(errc::both_zero, "gcd(0, 0)");
    while (!b.is_zero()) {
        Polynomial r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

/// Number of distinct real roots of a rational polynomial (Sturm sequence on
/// the square-free part).
inline std::size_t real_root_count(const Polynomial& p) {
    if (p.field().kind() != FieldKind::Rational)
        throw error(errc::wrong_field, "real root count needs a rational polynomial");
    if (p.is_zero()) throw error(errc::zero_polynomial, "real root count of zero");
    if (p.degree() == 0) return 0;

    const Polynomial squarefree = divmod(p, gcd(p, p.derivative())).first;
    std::vector<Polynomial> chain{squarefree, squarefree.derivative()};
    while (!chain.back().is_zero()) {
        Polynomial r = divmod(chain[chain.size() - 2], chain.back()).second;
        if (r.is_zero()) break;
        chain.push_back(r.scale(Scalar::from_int(p.field(), -1)));
    }

    // sign variations at -inf and +inf
    auto variations = [&](bool at_plus_infinity) {
        std::size_t count = 0;
        int previous = 0;
        for (const auto& q : chain) {
            int s = q.lead().sign();
            if (!at_plus_infinity && q.degree() % 2 == 1) s = -s;
            if (previous != 0 && s != previous) ++count;
            previous = s;
        }
        return count;
    };
    return variations(false) - variations(true);
}

/// All roots in GF(p), by exhaustive evaluation.
inline std::vector<Scalar> finite_field_roots(const Polynomial& p) {
    if (p.field().kind() != FieldKind::PrimeField)
        throw error(errc::wrong_field, "exhaustive root search needs a prime field");
    if (p.is_zero()) throw error(errc::zero_polynomial, "roots of zero");
    std::vector<Scalar> roots;
    for (std::uint64_t v = 0; v < p.field().characteristic(); ++v) {
        Scalar x = Scalar::residue(p.field(), v);
        if (p(x).is_zero()) roots.push_back(std::move(x));
    }
    return roots;
}

/// scale * (x + root_shift)^exponent
struct LinearPowerForm {
    Scalar scale;
    Scalar root_shift;
    unsigned exponent = 0;

    Polynomial expand() const { return Polynomial::linear(root_shift).pow(exponent).scale(scale); }
};

/// Recovers p = c (x + a)^d. Returns nullopt when p is not of that shape.
/// Over GF(p) with p <= d the binomial read-off is unreliable and
/// errc::characteristic_too_small is thrown; see extract_linear_power_by_roots.
inline std::optional<LinearPowerForm> extract_linear_power(const Polynomial& p) {
    if (p.is_zero()) throw error(errc::zero_polynomial, "linear power of zero");
    const auto& d = p.field();
    const auto degree = static_cast<unsigned>(p.degree());
    if (degree == 0) return LinearPowerForm{p.lead(), Scalar::zero(d), 0};
    if (d.kind() == FieldKind::PrimeField && d.characteristic() <= degree)
        throw error(errc::characteristic_too_small,
                    "degree " + std::to_string(degree) + " over " + d.tag());
    const Scalar& c = p.lead();
    LinearPowerForm form{c, p.coeff(degree - 1) / (c * Scalar::from_int(d, degree)), degree};
    if (form.expand() != p) return std::nullopt;
    return form;
}

/// Prime-field fallback: try each root of p as -a.
inline std::optional<LinearPowerForm> extract_linear_power_by_roots(const Polynomial& p) {
    if (p.is_zero()) throw error(errc::zero_polynomial, "linear power of zero");
    const auto degree = static_cast<unsigned>(p.degree());
    if (degree == 0) return LinearPowerForm{p.lead(), Scalar::zero(p.field()), 0};
    for (const auto& root : finite_field_roots(p)) {
        LinearPowerForm form{p.lead(), -root, degree};
        if (form.expand() == p) return form;
    }
    return std::nullopt;
}

}  // namespace tpres
