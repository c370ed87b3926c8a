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
 * Dense and structured matrices over a Scalar field.
 *
 * Toeplitz coordinates: an m x n Toeplitz matrix A with A(i,j) = a_{i-j} is
 * stored as the m+n-1 diagonal values, lowest subdiagonal first:
 *
 *     coords[k] = a_{m-1-k},   k = 0, ..., m+n-2
 *
 * so coords[0] is the bottom-left entry, coords[m-1] the main diagonal and
 * coords[m+n-2] the top-right entry. In this order the rank-one matrix
 * [x^{m-1}, ..., 1]^T [1, ..., x^{n-1}] has coordinates [1, x, ..., x^{m+n-2}].
 *
 * Hankel coordinates: H(i,j) = coords[i+j]. With these conventions
 * F_m * dense(Toeplitz) and the Hankel matrix share the same coordinate vector.
 */

#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "scalar.hpp"

namespace tpres {

class DenseMatrix {
   public:
    DenseMatrix(const FieldDescriptor& d, std::size_t rows, std::size_t cols)
        : field_(d), rows_(rows), cols_(cols), entries_(rows * cols, Scalar::zero(d)) {}

    DenseMatrix(const FieldDescriptor& d, std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
        : field_(d), rows_(rows), cols_(cols), entries_(std::move(entries)) {
        if (entries_.size() != rows * cols)
            throw error(errc::length_mismatch, "expected " + std::to_string(rows * cols) + " entries");
        for (const auto& e : entries_)
            if (!(e.field() == field_)) throw error(errc::field_mismatch, "entry outside " + d.tag());
    }

    static DenseMatrix identity(const FieldDescriptor& d, std::size_t n) {
        DenseMatrix m(d, n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(d);
        return m;
    }

    static DenseMatrix from_rows(const FieldDescriptor& d, const std::vector<std::vector<Scalar>>& rows) {
        if (rows.empty()) throw error(errc::length_mismatch, "matrix without rows");
        std::vector<Scalar> entries;
        for (const auto& r : rows) {
            if (r.size() != rows.front().size()) throw error(errc::length_mismatch, "ragged rows");
            entries.insert(entries.end(), r.begin(), r.end());
        }
        return DenseMatrix(d, rows.size(), rows.front().size(), std::move(entries));
    }

    /// Column vector.
    static DenseMatrix column(const FieldDescriptor& d, std::vector<Scalar> v) {
        const auto n = v.size();
        return DenseMatrix(d, n, 1, std::move(v));
    }

    const FieldDescriptor& field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }
    const std::vector<Scalar>& entries() const noexcept { return entries_; }

    Scalar& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    std::vector<Scalar> row(std::size_t i) const {
        return {entries_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
    }

    std::vector<Scalar> col(std::size_t j) const {
        std::vector<Scalar> v;
        v.reserve(rows_);
        for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
        return v;
    }

    bool is_zero() const {
        for (const auto& e : entries_)
            if (!e.is_zero()) return false;
        return true;
    }

    DenseMatrix transpose() const {
        DenseMatrix t(field_, cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    DenseMatrix scale(const Scalar& c) const {
        DenseMatrix r = *this;
        for (auto& e : r.entries_) e *= c;
        return r;
    }

    /// Matrix-vector product.
    std::vector<Scalar> apply(std::span<const Scalar> v) const {
        if (v.size() != cols_) throw error(errc::length_mismatch, "vector length vs columns");
        std::vector<Scalar> out(rows_, Scalar::zero(field_));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (!(*this)(i, j).is_zero()) out[i] += (*this)(i, j) * v[j];
        return out;
    }

    friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
        if (!(a.field_ == b.field_)) throw error(errc::field_mismatch, "matrix product");
        if (a.cols_ != b.rows_) throw error(errc::length_mismatch, "inner dimensions differ");
        DenseMatrix c(a.field_, a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Scalar& aik = a(i, k);
                if (aik.is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
            }
        return c;
    }

    friend DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw error(errc::length_mismatch, "matrix sum");
        DenseMatrix c = a;
        for (std::size_t k = 0; k < c.entries_.size(); ++k) c.entries_[k] += b.entries_[k];
        return c;
    }

    friend DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b) {
        return a + b.scale(-Scalar::one(b.field_));
    }

    friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
        return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }
    friend bool operator!=(const DenseMatrix& a, const DenseMatrix& b) { return !(a == b); }

   private:
    FieldDescriptor field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Scalar> entries_;
};

/// Outer product b c^T.
inline DenseMatrix outer(const FieldDescriptor& d, std::span<const Scalar> b, std::span<const Scalar> c) {
    DenseMatrix m(d, b.size(), c.size());
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = 0; j < c.size(); ++j) m(i, j) = b[i] * c[j];
    return m;
}

// ---------------------------------------------------------------------------
// exact elimination

namespace detail {

/// Fraction-free (Bareiss) forward elimination in place. Returns the rank and
/// the sign of the row permutation; for a full-rank square matrix the last
/// pivot is the determinant up to that sign.
inline std::pair<std::size_t, int> bareiss(DenseMatrix& a) {
    const auto& d = a.field();
    Scalar previous = Scalar::one(d);
    std::size_t r = 0;
    int sign = 1;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t pivot = r;
        while (pivot < a.rows() && a(pivot, c).is_zero()) ++pivot;
        if (pivot == a.rows()) continue;
        if (pivot != r) {
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(pivot, j), a(r, j));
            sign = -sign;
        }
        for (std::size_t i = r + 1; i < a.rows(); ++i) {
            for (std::size_t j = c + 1; j < a.cols(); ++j)
                a(i, j) = (a(r, c) * a(i, j) - a(i, c) * a(r, j)) / previous;
            a(i, c) = Scalar::zero(d);
        }
        previous = a(r, c);
        ++r;
    }
    return {r, sign};
}

}  // namespace detail

inline std::size_t exact_rank(const DenseMatrix& a) {
    DenseMatrix work = a;
    return detail::bareiss(work).first;
}

inline Scalar exact_det(const DenseMatrix& a) {
    if (!a.is_square()) throw error(errc::not_square, "determinant of a non-square matrix");
    if (a.rows() == 0) return Scalar::one(a.field());
    DenseMatrix work = a;
    const auto [rank, sign] = detail::bareiss(work);
    if (rank < a.rows()) return Scalar::zero(a.field());
    const Scalar& last = work(a.rows() - 1, a.cols() - 1);
    return sign > 0 ? last : -last;
}

/// Gauss-Jordan inverse.
inline DenseMatrix exact_inverse(const DenseMatrix& a) {
    if (!a.is_square()) throw error(errc::not_square, "inverse of a non-square matrix");
    const auto n = a.rows();
    const auto& d = a.field();
    DenseMatrix work = a;
    DenseMatrix inv = DenseMatrix::identity(d, n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = c;
        while (pivot < n && work(pivot, c).is_zero()) ++pivot;
        if (pivot == n) throw error(errc::singular, "matrix is singular");
        for (std::size_t j = 0; j < n; ++j) {
            std::swap(work(pivot, j), work(c, j));
            std::swap(inv(pivot, j), inv(c, j));
        }
        const Scalar scale = work(c, c).inv();
        for (std::size_t j = 0; j < n; ++j) {
            work(c, j) *= scale;
            inv(c, j) *= scale;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || work(i, c).is_zero()) continue;
            const Scalar factor = work(i, c);
            for (std::size_t j = 0; j < n; ++j) {
                work(i, j) -= factor * work(c, j);
                inv(i, j) -= factor * inv(c, j);
            }
        }
    }
    return inv;
}

// ---------------------------------------------------------------------------
// Toeplitz / Hankel

inline bool is_toeplitz(const DenseMatrix& a) {
    for (std::size_t i = 1; i < a.rows(); ++i)
        for (std::size_t j = 1; j < a.cols(); ++j)
            if (a(i, j) != a(i - 1, j - 1)) return false;
    return true;
}

inline bool is_hankel(const DenseMatrix& a) {
    for (std::size_t i = 1; i < a.rows(); ++i)
        for (std::size_t j = 0; j + 1 < a.cols(); ++j)
            if (a(i, j) != a(i - 1, j + 1)) return false;
    return true;
}

class ToeplitzMatrix {
   public:
    static ToeplitzMatrix from_coords(const FieldDescriptor& d, std::size_t m, std::size_t n,
                                      std::vector<Scalar> coords) {
        if (m == 0 || n == 0) throw error(errc::invalid_argument, "empty Toeplitz matrix");
        if (coords.size() != m + n - 1)
            throw error(errc::length_mismatch, "Toeplitz " + std::to_string(m) + "x" + std::to_string(n) +
                                                   " needs " + std::to_string(m + n - 1) + " coordinates");
        for (const auto& c : coords)
            if (!(c.field() == d)) throw error(errc::field_mismatch, "coordinate outside " + d.tag());
        return ToeplitzMatrix(d, m, n, std::move(coords));
    }

    static ToeplitzMatrix from_dense(const DenseMatrix& a) {
        if (!is_toeplitz(a)) throw error(errc::not_toeplitz, "matrix is not Toeplitz");
        const auto m = a.rows(), n = a.cols();
        std::vector<Scalar> coords;
        coords.reserve(m + n - 1);
        for (std::size_t i = m; i-- > 0;) coords.push_back(a(i, 0));  // a_{m-1}, ..., a_0
        for (std::size_t j = 1; j < n; ++j) coords.push_back(a(0, j));  // a_{-1}, ...
        return ToeplitzMatrix(a.field(), m, n, std::move(coords));
    }

    const FieldDescriptor& field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return m_; }
    std::size_t cols() const noexcept { return n_; }
    const std::vector<Scalar>& coords() const noexcept { return coords_; }

    /// a_{i-j}
    const Scalar& entry(std::size_t i, std::size_t j) const { return coords_[m_ - 1 - i + j]; }

    DenseMatrix dense() const {
        DenseMatrix a(field_, m_, n_);
        for (std::size_t i = 0; i < m_; ++i)
            for (std::size_t j = 0; j < n_; ++j) a(i, j) = entry(i, j);
        return a;
    }

    friend bool operator==(const ToeplitzMatrix&, const ToeplitzMatrix&) = default;

   private:
    ToeplitzMatrix(const FieldDescriptor& d, std::size_t m, std::size_t n, std::vector<Scalar> coords)
        : field_(d), m_(m), n_(n), coords_(std::move(coords)) {}

    FieldDescriptor field_;
    std::size_t m_;
    std::size_t n_;
    std::vector<Scalar> coords_;
};

class HankelMatrix {
   public:
    static HankelMatrix from_coords(const FieldDescriptor& d, std::size_t m, std::size_t n,
                                    std::vector<Scalar> coords) {
        const auto t = ToeplitzMatrix::from_coords(d, m, n, std::move(coords));  // same validation
        return HankelMatrix(d, m, n, t.coords());
    }

    static HankelMatrix from_dense(const DenseMatrix& a) {
        if (!is_hankel(a)) throw error(errc::not_toeplitz, "matrix is not Hankel");
        std::vector<Scalar> coords = a.row(0);
        for (std::size_t i = 1; i < a.rows(); ++i) coords.push_back(a(i, a.cols() - 1));
        return HankelMatrix(a.field(), a.rows(), a.cols(), std::move(coords));
    }

    const FieldDescriptor& field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return m_; }
    std::size_t cols() const noexcept { return n_; }
    const std::vector<Scalar>& coords() const noexcept { return coords_; }

    DenseMatrix dense() const {
        DenseMatrix a(field_, m_, n_);
        for (std::size_t i = 0; i < m_; ++i)
            for (std::size_t j = 0; j < n_; ++j) a(i, j) = coords_[i + j];
        return a;
    }

    friend bool operator==(const HankelMatrix&, const HankelMatrix&) = default;

   private:
    HankelMatrix(const FieldDescriptor& d, std::size_t m, std::size_t n, std::vector<Scalar> coords)
        : field_(d), m_(m), n_(n), coords_(std::move(coords)) {}

    FieldDescriptor field_;
    std::size_t m_;
    std::size_t n_;
    std::vector<Scalar> coords_;
};

/// F_n A for square Toeplitz A; the coordinate vector carries over unchanged.
inline HankelMatrix hankel_conjugate(const ToeplitzMatrix& a) {
    if (a.rows() != a.cols()) throw error(errc::not_square, "Hankel conjugation needs a square matrix");
    return HankelMatrix::from_coords(a.field(), a.rows(), a.cols(), a.coords());
}

/// F_n H for square Hankel H.
inline ToeplitzMatrix toeplitz_conjugate(const HankelMatrix& h) {
    if (h.rows() != h.cols()) throw error(errc::not_square, "Hankel conjugation needs a square matrix");
    return ToeplitzMatrix::from_coords(h.field(), h.rows(), h.cols(), h.coords());
}

}  // namespace tpres
