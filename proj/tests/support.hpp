// Independent reference computations for the test suites. Nothing here calls
// into the library's elimination, membership or polynomial code paths.
#pragma once

#include <gtest/gtest.h>

#include <random>
#include <vector>

#include <tpres/tpres.hpp>

namespace tpres::testing {

inline const FieldDescriptor Q = FieldDescriptor::rational();
inline const FieldDescriptor QI = FieldDescriptor::gaussian_rational();
inline const FieldDescriptor GF5 = FieldDescriptor::prime(5);
inline const FieldDescriptor GF13 = FieldDescriptor::prime(13);

inline Scalar s(const FieldDescriptor& d, long long v) { return Scalar::from_int(d, v); }
inline Scalar q(long num, long den = 1) { return Scalar::from_rational(Q, mpq_class(num, den)); }
inline Scalar tok(const char* t, const FieldDescriptor& d) { return parse_scalar(t, d); }

inline std::vector<Scalar> ints(const FieldDescriptor& d, std::initializer_list<long long> v) {
    std::vector<Scalar> out;
    for (auto x : v) out.push_back(s(d, x));
    return out;
}

inline DenseMatrix mat(const FieldDescriptor& d, std::initializer_list<std::initializer_list<long long>> rows) {
    std::vector<std::vector<Scalar>> r;
    for (const auto& row : rows) r.push_back(ints(d, row));
    return DenseMatrix::from_rows(d, r);
}

/// Laplace expansion along the first row.
inline Scalar cofactor_det(const DenseMatrix& a) {
    const auto n = a.rows();
    const auto& d = a.field();
    if (n == 0) return Scalar::one(d);
    if (n == 1) return a(0, 0);
    Scalar total = Scalar::zero(d);
    for (std::size_t j = 0; j < n; ++j) {
        DenseMatrix minor(d, n - 1, n - 1);
        for (std::size_t i = 1; i < n; ++i)
            for (std::size_t k = 0, c = 0; k < n; ++k)
                if (k != j) minor(i - 1, c++) = a(i, k);
        const Scalar term = a(0, j) * cofactor_det(minor);
        total = (j % 2 == 0) ? total + term : total - term;
    }
    return total;
}

/// Plain Gauss elimination with field division.
inline std::size_t naive_rank(DenseMatrix a) {
    std::size_t rank = 0;
    for (std::size_t c = 0; c < a.cols() && rank < a.rows(); ++c) {
        std::size_t pivot = rank;
        while (pivot < a.rows() && a(pivot, c).is_zero()) ++pivot;
        if (pivot == a.rows()) continue;
        for (std::size_t k = 0; k < a.cols(); ++k) std::swap(a(rank, k), a(pivot, k));
        for (std::size_t i = rank + 1; i < a.rows(); ++i) {
            const Scalar f = a(i, c) / a(rank, c);
            for (std::size_t k = c; k < a.cols(); ++k) a(i, k) -= f * a(rank, k);
        }
        ++rank;
    }
    return rank;
}

/// Coefficients of prod (x + r_k) by repeated convolution.
inline std::vector<Scalar> expand_linear_factors(const FieldDescriptor& d, const std::vector<Scalar>& shifts) {
    std::vector<Scalar> c{Scalar::one(d)};
    for (const auto& r : shifts) {
        std::vector<Scalar> next(c.size() + 1, Scalar::zero(d));
        for (std::size_t k = 0; k < c.size(); ++k) {
            next[k] += c[k] * r;
            next[k + 1] += c[k];
        }
        c = std::move(next);
    }
    return c;
}

/// Dot product of a row vector [1, x, ..., x^{n-1}] with a column, evaluated at x.
inline Scalar row_times_column(const Scalar& x, const std::vector<Scalar>& column) {
    Scalar acc = Scalar::zero(x.field()), power = Scalar::one(x.field());
    for (const auto& c : column) {
        acc += power * c;
        power *= x;
    }
    return acc;
}

inline Scalar random_rational(std::mt19937_64& rng, long range = 9) {
    const long num = static_cast<long>(rng() % (2 * range + 1)) - range;
    const long den = static_cast<long>(rng() % 7) + 1;
    return Scalar::from_rational(Q, mpq_class(num, den));
}

inline GeneratorSpec random_spec(const FieldDescriptor& d, std::mt19937_64& rng) {
    GeneratorSpec spec;
    spec.form = static_cast<PreserverForm>(rng() % 3);
    spec.gamma = random_nonzero_scalar(d, rng, 5);
    spec.r = random_nonzero_scalar(d, rng, 5);
    spec.alpha = random_scalar(d, rng, 5);
    if (spec.form == PreserverForm::WForm) {
        do spec.beta = random_scalar(d, rng, 5);
        while (*spec.beta == spec.alpha);
    }
    return spec;
}

}  // namespace tpres::testing
