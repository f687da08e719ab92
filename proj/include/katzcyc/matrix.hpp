#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace katzcyc {

/// Row vector of coordinates in a fixed basis.
template <class E>
using Row = std::vector<E>;

/// Dense row-major matrix over an exact commutative ring whose element type
/// default-constructs to zero.
template <class E>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<E> data)
        : rows_(rows), cols_(cols), data_(std::move(data)) {
        if (data_.size() != rows * cols) throw std::invalid_argument("Matrix: data size mismatch");
    }

    static Matrix identity(std::size_t n, const E& one) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
        return m;
    }
    static Matrix from_rows(const std::vector<Row<E>>& rows) {
        const std::size_t r = rows.size();
        const std::size_t c = r ? rows[0].size() : 0;
        Matrix m(r, c);
        for (std::size_t i = 0; i < r; ++i) {
            if (rows[i].size() != c) throw std::invalid_argument("Matrix: ragged rows");
            for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    E& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const E& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Row<E> row(std::size_t i) const {
        return Row<E>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                      data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
    }
    void set_row(std::size_t i, const Row<E>& r) {
        if (r.size() != cols_) throw std::invalid_argument("Matrix: row length mismatch");
        for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = r[j];
    }

    template <class F>
    auto map(F&& f) const {
        using D = std::decay_t<decltype(f(std::declval<const E&>()))>;
        std::vector<D> out;
        out.reserve(data_.size());
        for (const auto& e : data_) out.push_back(f(e));
        return Matrix<D>(rows_, cols_, std::move(out));
    }

    const std::vector<E>& data() const noexcept { return data_; }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        a.require_same_shape(b);
        Matrix r(a.rows_, a.cols_);
        for (std::size_t k = 0; k < a.data_.size(); ++k) r.data_[k] = a.data_[k] + b.data_[k];
        return r;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        a.require_same_shape(b);
        Matrix r(a.rows_, a.cols_);
        for (std::size_t k = 0; k < a.data_.size(); ++k) r.data_[k] = a.data_[k] - b.data_[k];
        return r;
    }
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix: incompatible product");
        Matrix r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const E& aik = a(i, k);
                if (aik == E{}) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) = r(i, j) + aik * b(k, j);
            }
        return r;
    }
    /// Scalar on the left.
    friend Matrix operator*(const E& c, const Matrix& a) {
        Matrix r(a.rows_, a.cols_);
        for (std::size_t k = 0; k < a.data_.size(); ++k) r.data_[k] = c * a.data_[k];
        return r;
    }

private:
    void require_same_shape(const Matrix& b) const {
        if (rows_ != b.rows_ || cols_ != b.cols_) throw std::invalid_argument("Matrix: shape mismatch");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<E> data_;
};

/// Row vector times matrix.
template <class E>
Row<E> operator*(const Row<E>& v, const Matrix<E>& m) {
    if (v.size() != m.rows()) throw std::invalid_argument("Row * Matrix: size mismatch");
    Row<E> out(m.cols());
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (v[k] == E{}) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) out[j] = out[j] + v[k] * m(k, j);
    }
    return out;
}

/// Determinant by Laplace expansion over column subsets, O(n 2^n) products and
/// no divisions, so it is exact over any commutative ring.
template <class E>
E determinant(const Matrix<E>& a, const E& one) {
    if (!a.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
    const std::size_t n = a.rows();
    if (n == 0) return one;
    if (n > 20) throw std::invalid_argument("determinant: dimension too large for subset expansion");
    std::vector<E> minors(std::size_t{1} << n);
    minors[0] = one;
    std::vector<bool> present(minors.size(), false);
    present[0] = true;
    for (std::uint32_t mask = 0; mask + 1 < (std::uint32_t{1} << n); ++mask) {
        if (!present[mask]) continue;
        const std::size_t row = static_cast<std::size_t>(std::popcount(mask));
        const E& base = minors[mask];
        if (base == E{}) continue;
        for (std::size_t c = 0; c < n; ++c) {
            const std::uint32_t bit = std::uint32_t{1} << c;
            if (mask & bit) continue;
            const E& entry = a(row, c);
            if (entry == E{}) continue;
            // sign of placing column c after the columns already used that lie to its right
            const int above = std::popcount(mask >> (c + 1));
            E term = base * entry;
            if (above & 1) term = -term;
            minors[mask | bit] = present[mask | bit] ? minors[mask | bit] + term : term;
            present[mask | bit] = true;
        }
    }
    const std::uint32_t full = (std::uint32_t{1} << n) - 1;
    return present[full] ? minors[full] : E{};
}

}  // namespace katzcyc
