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
 * Exact scalars over three fields selected at run time:
 *
 *     q       the rationals, arbitrary precision (GMP)
 *     qi      the Gaussian rationals a + b i, a, b rational
 *     gf:<p>  the prime field Z/pZ, p < 2^32, residues in [0, p)
 *
 * Every Scalar carries its FieldDescriptor; mixing fields throws
 * errc::field_mismatch. There is no floating point anywhere.
 */

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <variant>

#include "error.hpp"

namespace tpres {

enum class FieldKind { Rational, GaussianRational, PrimeField };

class FieldDescriptor {
   public:
    static FieldDescriptor rational() noexcept { return {FieldKind::Rational, 0}; }
    static FieldDescriptor gaussian_rational() noexcept { return {FieldKind::GaussianRational, 0}; }

    static FieldDescriptor prime(std::uint64_t p) {
        if (p < 2 || p >= (std::uint64_t{1} << 32) || !is_prime(p))
            throw error(errc::invalid_argument, "prime field modulus must be a prime below 2^32, got " +
                                                    std::to_string(p));
        return {FieldKind::PrimeField, p};
    }

    /// Accepts "q", "qi" and "gf:<p>".
    static FieldDescriptor parse(std::string_view tag) {
        if (tag == "q") return rational();
        if (tag == "qi") return gaussian_rational();
        if (tag.substr(0, 3) == "gf:" && tag.size() > 3) {
            std::uint64_t p = 0;
            for (char ch : tag.substr(3)) {
                if (ch < '0' || ch > '9' || p > (std::uint64_t{1} << 40))
                    throw error(errc::parse_error, "bad field tag '" + std::string(tag) + "'");
                p = p * 10 + static_cast<std::uint64_t>(ch - '0');
            }
            try {
                return prime(p);
            } catch (const error&) {
                throw error(errc::parse_error, "field tag '" + std::string(tag) + "' is not a prime field");
            }
        }
        throw error(errc::parse_error, "unknown field tag '" + std::string(tag) + "'");
    }

    FieldKind kind() const noexcept { return kind_; }
    std::uint64_t characteristic() const noexcept { return p_; }
    bool is_real_closed_compatible() const noexcept { return kind_ == FieldKind::Rational; }
    bool is_finite() const noexcept { return kind_ == FieldKind::PrimeField; }

    std::string tag() const {
        switch (kind_) {
            case FieldKind::Rational: return "q";
            case FieldKind::GaussianRational: return "qi";
            case FieldKind::PrimeField: return "gf:" + std::to_string(p_);
        }
        return "?";
    }

    friend bool operator==(const FieldDescriptor&, const FieldDescriptor&) = default;

   private:
    FieldDescriptor(FieldKind kind, std::uint64_t p) noexcept : kind_(kind), p_(p) {}

    static bool is_prime(std::uint64_t p) noexcept {
        if (p < 2) return false;
        for (std::uint64_t d = 2; d * d <= p; ++d)
            if (p % d == 0) return false;
        return true;
    }

    FieldKind kind_;
    std::uint64_t p_;
};

inline std::ostream& operator<<(std::ostream& os, const FieldDescriptor& d) { return os << d.tag(); }

struct GaussianValue {
    mpq_class re;
    mpq_class im;
};

class Scalar {
   public:
    /// Rational zero; present so Scalars can live in standard containers.
    Scalar() : field_(FieldDescriptor::rational()), value_(mpq_class(0)) {}

    static Scalar zero(const FieldDescriptor& d) { return from_int(d, 0); }
    static Scalar one(const FieldDescriptor& d) { return from_int(d, 1); }

    static Scalar from_int(const FieldDescriptor& d, long long v) {
        if (d.kind() == FieldKind::PrimeField) {
            const auto p = static_cast<long long>(d.characteristic());
            long long r = v % p;
            if (r < 0) r += p;
            return Scalar(d, static_cast<std::uint64_t>(r));
        }
        return from_rational(d, mpq_class(static_cast<long>(v)));
    }

    /// Image of a rational in the field; over GF(p) the denominator must be a unit.
    static Scalar from_rational(const FieldDescriptor& d, const mpq_class& q) {
        switch (d.kind()) {
            case FieldKind::Rational: return Scalar(d, canonical(q));
            case FieldKind::GaussianRational: return Scalar(d, GaussianValue{canonical(q), 0});
            case FieldKind::PrimeField: {
                const mpz_class p(std::to_string(d.characteristic()));
                mpz_class num = q.get_num() % p;
                if (num < 0) num += p;
                mpz_class den = q.get_den() % p;
                if (den == 0) throw error(errc::division_by_zero, "denominator vanishes in " + d.tag());
                Scalar n(d, static_cast<std::uint64_t>(num.get_ui()));
                return n / Scalar(d, static_cast<std::uint64_t>(den.get_ui()));
            }
        }
        throw error(errc::invalid_argument, "unknown field kind");
    }

    static Scalar gaussian(const mpq_class& re, const mpq_class& im) {
        return Scalar(FieldDescriptor::gaussian_rational(), GaussianValue{canonical(re), canonical(im)});
    }

    static Scalar residue(const FieldDescriptor& d, std::uint64_t v) {
        if (d.kind() != FieldKind::PrimeField) throw error(errc::wrong_field, "residue outside a prime field");
        return Scalar(d, v % d.characteristic());
    }

    const FieldDescriptor& field() const noexcept { return field_; }

    bool is_zero() const {
        switch (field_.kind()) {
            case FieldKind::Rational: return sgn(std::get<mpq_class>(value_)) == 0;
            case FieldKind::GaussianRational: {
                const auto& g = std::get<GaussianValue>(value_);
                return sgn(g.re) == 0 && sgn(g.im) == 0;
            }
            case FieldKind::PrimeField: return std::get<std::uint64_t>(value_) == 0;
        }
        return false;
    }

    bool is_one() const { return *this == one(field_); }

    const mpq_class& rational() const {
        if (field_.kind() != FieldKind::Rational) throw error(errc::wrong_field, "not a rational scalar");
        return std::get<mpq_class>(value_);
    }
    const GaussianValue& gaussian() const {
        if (field_.kind() != FieldKind::GaussianRational)
            throw error(errc::wrong_field, "not a Gaussian rational scalar");
        return std::get<GaussianValue>(value_);
    }
    std::uint64_t residue() const {
        if (field_.kind() != FieldKind::PrimeField) throw error(errc::wrong_field, "not a residue");
        return std::get<std::uint64_t>(value_);
    }

    /// Sign of a rational scalar.
    int sign() const { return sgn(rational()); }

    Scalar operator-() const {
        switch (field_.kind()) {
            case FieldKind::Rational: return Scalar(field_, mpq_class(-std::get<mpq_class>(value_)));
            case FieldKind::GaussianRational: {
                const auto& g = std::get<GaussianValue>(value_);
                return Scalar(field_, GaussianValue{-g.re, -g.im});
            }
            case FieldKind::PrimeField: {
                const auto v = std::get<std::uint64_t>(value_);
                return Scalar(field_, v == 0 ? 0 : field_.characteristic() - v);
            }
        }
        return *this;
    }

    Scalar inv() const {
        if (is_zero()) throw error(errc::division_by_zero, "inverse of zero");
        switch (field_.kind()) {
            case FieldKind::Rational: return Scalar(field_, mpq_class(1 / std::get<mpq_class>(value_)));
            case FieldKind::GaussianRational: {
                const auto& g = std::get<GaussianValue>(value_);
                mpq_class norm = g.re * g.re + g.im * g.im;
                return Scalar(field_, GaussianValue{mpq_class(g.re / norm), mpq_class(-g.im / norm)});
            }
            case FieldKind::PrimeField: {
                // extended Euclid on (v, p)
                std::int64_t t = 0, new_t = 1;
                std::int64_t r = static_cast<std::int64_t>(field_.characteristic());
                std::int64_t new_r = static_cast<std::int64_t>(std::get<std::uint64_t>(value_));
                while (new_r != 0) {
                    const std::int64_t q = r / new_r;
                    t = std::exchange(new_t, t - q * new_t);
                    r = std::exchange(new_r, r - q * new_r);
                }
                if (t < 0) t += static_cast<std::int64_t>(field_.characteristic());
                return Scalar(field_, static_cast<std::uint64_t>(t));
            }
        }
        return *this;
    }

    /// Any integer exponent; negative exponents require a nonzero base.
    Scalar pow(long long k) const {
        if (k < 0) return inv().pow_unsigned(static_cast<unsigned long long>(-(k + 1)) + 1);
        return pow_unsigned(static_cast<unsigned long long>(k));
    }

    Scalar& operator+=(const Scalar& b) {
        check_same(b);
        switch (field_.kind()) {
            case FieldKind::Rational: std::get<mpq_class>(value_) += std::get<mpq_class>(b.value_); break;
            case FieldKind::GaussianRational: {
                auto& g = std::get<GaussianValue>(value_);
                const auto& h = std::get<GaussianValue>(b.value_);
                g.re += h.re;
                g.im += h.im;
                break;
            }
            case FieldKind::PrimeField: {
                auto& v = std::get<std::uint64_t>(value_);
                v = (v + std::get<std::uint64_t>(b.value_)) % field_.characteristic();
                break;
            }
        }
        return *this;
    }

    Scalar& operator-=(const Scalar& b) { return *this += -b; }

    Scalar& operator*=(const Scalar& b) {
        check_same(b);
        switch (field_.kind()) {
            case FieldKind::Rational: std::get<mpq_class>(value_) *= std::get<mpq_class>(b.value_); break;
            case FieldKind::GaussianRational: {
                auto& g = std::get<GaussianValue>(value_);
                const auto& h = std::get<GaussianValue>(b.value_);
                mpq_class re = g.re * h.re - g.im * h.im;
                mpq_class im = g.re * h.im + g.im * h.re;
                g.re = std::move(re);
                g.im = std::move(im);
                break;
            }
            case FieldKind::PrimeField: {
                auto& v = std::get<std::uint64_t>(value_);
                v = (v * std::get<std::uint64_t>(b.value_)) % field_.characteristic();
                break;
            }
        }
        return *this;
    }

    Scalar& operator/=(const Scalar& b) {
        check_same(b);
        return *this *= b.inv();
    }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        a.check_same(b);
        switch (a.field_.kind()) {
            case FieldKind::Rational: return std::get<mpq_class>(a.value_) == std::get<mpq_class>(b.value_);
            case FieldKind::GaussianRational: {
                const auto& g = std::get<GaussianValue>(a.value_);
                const auto& h = std::get<GaussianValue>(b.value_);
                return g.re == h.re && g.im == h.im;
            }
            case FieldKind::PrimeField:
                return std::get<std::uint64_t>(a.value_) == std::get<std::uint64_t>(b.value_);
        }
        return false;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

   private:
    Scalar(const FieldDescriptor& d, mpq_class q) : field_(d), value_(std::move(q)) {}
    Scalar(const FieldDescriptor& d, GaussianValue g) : field_(d), value_(std::move(g)) {}
    Scalar(const FieldDescriptor& d, std::uint64_t v) : field_(d), value_(v) {}

    static mpq_class canonical(mpq_class q) {
        q.canonicalize();
        return q;
    }

    void check_same(const Scalar& b) const {
        if (!(field_ == b.field_))
            throw error(errc::field_mismatch, field_.tag() + " vs " + b.field_.tag());
    }

    Scalar pow_unsigned(unsigned long long k) const {
        Scalar result = one(field_);
        Scalar base = *this;
        while (k != 0) {
            if (k & 1u) result *= base;
            k >>= 1;
            if (k != 0) base *= base;
        }
        return result;
    }

    FieldDescriptor field_;
    std::variant<mpq_class, GaussianValue, std::uint64_t> value_;
};

// ---------------------------------------------------------------------------
// tokens

namespace detail {

inline bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char ch : s)
        if (ch < '0' || ch > '9') return false;
    return true;
}

/// "[-]digits[/digits]", denominator nonzero.
inline mpq_class parse_rational(std::string_view tok, std::string_view whole) {
    std::string_view body = tok;
    bool negative = false;
    if (!body.empty() && body.front() == '-') {
        negative = true;
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    const std::string_view num = body.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
        throw error(errc::parse_error, "malformed rational '" + std::string(whole) + "'");
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) throw error(errc::parse_error, "zero denominator in '" + std::string(whole) + "'");
    mpq_class q(negative ? mpz_class(-n) : n, d);
    q.canonicalize();
    return q;
}

}  // namespace detail

/// Grammar: q "[-]digits[/digits]"; qi "a", "a+bi", "a-bi", "bi" (b may be omitted for 1); gf:p decimal residue.
inline Scalar parse_scalar(std::string_view tok, const FieldDescriptor& d) {
    switch (d.kind()) {
        case FieldKind::Rational: return Scalar::from_rational(d, detail::parse_rational(tok, tok));
        case FieldKind::GaussianRational: {
            if (tok.empty() || tok.back() != 'i') return Scalar::gaussian(detail::parse_rational(tok, tok), 0);
            const std::string_view body = tok.substr(0, tok.size() - 1);
            // a unit imaginary part may omit its magnitude: "i", "-i", "2+i"
            auto imaginary = [&](std::string_view digits, bool negative) {
                mpq_class im = digits.empty() ? mpq_class(1) : detail::parse_rational(digits, tok);
                return negative ? mpq_class(-im) : im;
            };
            const auto split = body.find_last_of("+-");
            if (split == std::string_view::npos || split == 0) {
                const bool negative = !body.empty() && body.front() == '-';
                return Scalar::gaussian(0, imaginary(body.substr(negative ? 1 : 0), negative));
            }
            mpq_class re = detail::parse_rational(body.substr(0, split), tok);
            const std::string_view im_digits = body.substr(split + 1);
            if (!im_digits.empty() && im_digits.front() == '-')
                throw error(errc::parse_error, "malformed Gaussian rational '" + std::string(tok) + "'");
            return Scalar::gaussian(re, imaginary(im_digits, body[split] == '-'));
        }
        case FieldKind::PrimeField: {
            std::string_view body = tok;
            if (!body.empty() && body.front() == '-') {
                if (detail::all_digits(body.substr(1)))
                    throw error(errc::not_a_residue, "negative residue '" + std::string(tok) + "'");
                throw error(errc::parse_error, "malformed residue '" + std::string(tok) + "'");
            }
            if (!detail::all_digits(body))
                throw error(errc::parse_error, "malformed residue '" + std::string(tok) + "'");
            mpz_class v(std::string(body), 10);
            if (v >= mpz_class(std::to_string(d.characteristic())))
                throw error(errc::not_a_residue, "'" + std::string(tok) + "' is not below " +
                                                     std::to_string(d.characteristic()));
            return Scalar::residue(d, v.get_ui());
        }
    }
    throw error(errc::parse_error, "unknown field");
}

inline std::string format_scalar(const Scalar& s) {
    switch (s.field().kind()) {
        case FieldKind::Rational: return s.rational().get_str();
        case FieldKind::GaussianRational: {
            const auto& g = s.gaussian();
            if (sgn(g.im) == 0) return g.re.get_str();
            const mpq_class mag = abs(g.im);
            const std::string im = mag == 1 ? std::string("i") : mag.get_str() + "i";
            if (sgn(g.re) == 0) return (sgn(g.im) < 0 ? "-" : "") + im;
            return g.re.get_str() + (sgn(g.im) > 0 ? "+" : "-") + im;
        }
        case FieldKind::PrimeField: return std::to_string(s.residue());
    }
    return "?";
}

inline std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << format_scalar(s); }

}  // namespace tpres
