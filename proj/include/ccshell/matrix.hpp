#pragma once

#include "ccshell/ring.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace ccs {

using Vector = std::vector<Scalar>;

/// Row-major dense matrix. Used for SNF transforms and small oracles.
class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static DenseMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Vector column(std::size_t j) const;
    bool operator==(const DenseMatrix& other) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

DenseMatrix multiply(const Ring& ring, const DenseMatrix& a, const DenseMatrix& b);

/// Column-major sparse matrix over a ring. Each column is a list of
/// (row, value) pairs sorted by row with no stored zeros.
class SparseMatrix {
public:
    using Entry = std::pair<std::size_t, Scalar>;

    SparseMatrix() : ring_(Ring::integers()) {}
    SparseMatrix(Ring ring, std::size_t rows, std::size_t cols);

    static SparseMatrix from_dense(const Ring& ring, const DenseMatrix& m);
    static SparseMatrix from_columns(const Ring& ring, std::size_t rows, const std::vector<Vector>& columns);

    const Ring& ring() const { return ring_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return columns_.size(); }

    /// Sets one entry; the value is reduced into the ring and zeros are dropped.
    void set(std::size_t row, std::size_t col, const Scalar& value);
    Scalar at(std::size_t row, std::size_t col) const;
    const std::vector<Entry>& column(std::size_t j) const { return columns_[j]; }
    Vector dense_column(std::size_t j) const;

    bool is_zero() const;
    std::size_t nonzeros() const;
    DenseMatrix to_dense() const;
    SparseMatrix transpose() const;
    SparseMatrix select_columns(const std::vector<std::size_t>& cols) const;
    /// Keeps only the listed rows, in the given order.
    SparseMatrix select_rows(const std::vector<std::size_t>& rows) const;
    /// Computes M * x.
    Vector apply(const Vector& x) const;

    bool operator==(const SparseMatrix& other) const
    {
        return ring_ == other.ring_ && rows_ == other.rows_ && columns_ == other.columns_;
    }

private:
    Ring ring_;
    std::size_t rows_ = 0;
    std::vector<std::vector<Entry>> columns_;
};

SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b);

}  // namespace ccs
