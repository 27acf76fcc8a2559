#pragma once

#include <stdexcept>
#include <vector>

#include "segkit/scalar.hpp"

namespace segkit {

/// Dense exact-rational matrix.
class Matrix {
  public:
    Matrix() = default;
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(rows * cols, Scalar(0)) {}

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Scalar& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Scalar& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

    bool is_zero() const {
        for (const auto& x : a_)
            if (x != 0) return false;
        return true;
    }

    Scalar trace() const {
        Scalar t(0);
        for (int i = 0; i < std::min(rows_, cols_); ++i) t += at(i, i);
        return t;
    }

    Matrix operator+(const Matrix& o) const {
        check_same(o);
        Matrix out = *this;
        for (std::size_t k = 0; k < a_.size(); ++k) out.a_[k] += o.a_[k];
        return out;
    }

    Matrix operator-(const Matrix& o) const {
        check_same(o);
        Matrix out = *this;
        for (std::size_t k = 0; k < a_.size(); ++k) out.a_[k] -= o.a_[k];
        return out;
    }

    Matrix operator*(const Scalar& c) const {
        Matrix out = *this;
        for (auto& x : out.a_) x *= c;
        return out;
    }

    // Column-combination product; skipping zero entries of the right factor
    // keeps this cheap on the near-diagonal matrices used here.
    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch");
        Matrix out(rows_, o.cols_);
        for (int j = 0; j < o.cols_; ++j)
            for (int k = 0; k < o.rows_; ++k) {
                const Scalar& b = o.at(k, j);
                if (b == 0) continue;
                for (int i = 0; i < rows_; ++i) {
                    const Scalar& a = at(i, k);
                    if (a == 0) continue;
                    out.at(i, j) += a * b;
                }
            }
        return out;
    }

    bool operator==(const Matrix&) const = default;

  private:
    void check_same(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("matrix shape mismatch");
    }

    int rows_ = 0;
    int cols_ = 0;
    std::vector<Scalar> a_;
};

/// Rank by fraction-free (Bareiss) elimination: rows are scaled to integers,
/// then every intermediate entry stays a minor of the scaled matrix.
inline int rank(const Matrix& m) {
    using boost::multiprecision::denominator;
    using boost::multiprecision::gcd;
    using boost::multiprecision::numerator;
    int rows = m.rows(), cols = m.cols();
    std::vector<std::vector<BigInt>> a(rows, std::vector<BigInt>(cols));
    for (int i = 0; i < rows; ++i) {
        BigInt scale = 1;
        for (int j = 0; j < cols; ++j) {
            BigInt d = denominator(m.at(i, j));
            scale = scale / gcd(scale, d) * d;
        }
        for (int j = 0; j < cols; ++j)
            a[i][j] = numerator(m.at(i, j)) * (scale / denominator(m.at(i, j)));
    }
    BigInt prev = 1;
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int i = rank; i < rows; ++i)
            if (a[i][col] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(a[rank], a[pivot]);
        for (int i = rank + 1; i < rows; ++i) {
            for (int j = col + 1; j < cols; ++j)
                a[i][j] = (a[rank][col] * a[i][j] - a[i][col] * a[rank][j]) / prev;
            a[i][col] = 0;
        }
        prev = a[rank][col];
        ++rank;
    }
    return rank;
}

/// In-place reduced row echelon form; returns the pivot columns.
inline std::vector<int> rref(Matrix& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int pivot = -1;
        for (int i = row; i < m.rows(); ++i)
            if (m.at(i, col) != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != row)
            for (int j = 0; j < m.cols(); ++j) std::swap(m.at(row, j), m.at(pivot, j));
        Scalar inv = Scalar(1) / m.at(row, col);
        for (int j = col; j < m.cols(); ++j) m.at(row, j) *= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == row || m.at(i, col) == 0) continue;
            Scalar factor = m.at(i, col);
            for (int j = col; j < m.cols(); ++j) m.at(i, j) -= factor * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace segkit
