#include "ccshell/matrix.hpp"

#include "ccshell/error.hpp"

#include <algorithm>

namespace ccs {

DenseMatrix DenseMatrix::identity(std::size_t n)
{
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

Vector DenseMatrix::column(std::size_t j) const
{
    Vector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        v[i] = (*this)(i, j);
    return v;
}

DenseMatrix multiply(const Ring& ring, const DenseMatrix& a, const DenseMatrix& b)
{
    if (a.cols() != b.rows())
        throw Error(ErrorKind::InvalidInput, "dimension mismatch in matrix product");
    DenseMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0)
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                c(i, j) += a(i, k) * b(k, j);
        }
    for (std::size_t i = 0; i < c.rows(); ++i)
        for (std::size_t j = 0; j < c.cols(); ++j)
            c(i, j) = ring.reduce(c(i, j));
    return c;
}

SparseMatrix::SparseMatrix(Ring ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), columns_(cols)
{
}

SparseMatrix SparseMatrix::from_dense(const Ring& ring, const DenseMatrix& m)
{
    SparseMatrix s(ring, m.rows(), m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j)
        for (std::size_t i = 0; i < m.rows(); ++i)
            s.set(i, j, m(i, j));
    return s;
}

SparseMatrix SparseMatrix::from_columns(const Ring& ring, std::size_t rows, const std::vector<Vector>& columns)
{
    SparseMatrix s(ring, rows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
        if (columns[j].size() != rows)
            throw Error(ErrorKind::InvalidInput, "column length does not match row count");
        for (std::size_t i = 0; i < rows; ++i)
            s.set(i, j, columns[j][i]);
    }
    return s;
}

void SparseMatrix::set(std::size_t row, std::size_t col, const Scalar& value)
{
    if (row >= rows_ || col >= columns_.size())
        throw Error(ErrorKind::IndexOutOfRange, "matrix entry out of range");
    Scalar v = ring_.reduce(value);
    auto& c = columns_[col];
    auto it = std::lower_bound(c.begin(), c.end(), row, [](const Entry& e, std::size_t r) { return e.first < r; });
    if (it != c.end() && it->first == row) {
        if (v == 0)
            c.erase(it);
        else
            it->second = v;
    } else if (v != 0) {
        c.insert(it, Entry(row, v));
    }
}

Scalar SparseMatrix::at(std::size_t row, std::size_t col) const
{
    const auto& c = columns_.at(col);
    auto it = std::lower_bound(c.begin(), c.end(), row, [](const Entry& e, std::size_t r) { return e.first < r; });
    if (it != c.end() && it->first == row)
        return it->second;
    return 0;
}

Vector SparseMatrix::dense_column(std::size_t j) const
{
    Vector v(rows_);
    for (const auto& [i, x] : columns_.at(j))
        v[i] = x;
    return v;
}

bool SparseMatrix::is_zero() const
{
    return std::all_of(columns_.begin(), columns_.end(), [](const auto& c) { return c.empty(); });
}

std::size_t SparseMatrix::nonzeros() const
{
    std::size_t n = 0;
    for (const auto& c : columns_)
        n += c.size();
    return n;
}

DenseMatrix SparseMatrix::to_dense() const
{
    DenseMatrix m(rows_, columns_.size());
    for (std::size_t j = 0; j < columns_.size(); ++j)
        for (const auto& [i, x] : columns_[j])
            m(i, j) = x;
    return m;
}

SparseMatrix SparseMatrix::transpose() const
{
    SparseMatrix t(ring_, columns_.size(), rows_);
    for (std::size_t j = 0; j < columns_.size(); ++j)
        for (const auto& [i, x] : columns_[j])
            t.columns_[i].emplace_back(j, x);
    return t;
}

SparseMatrix SparseMatrix::select_columns(const std::vector<std::size_t>& cols) const
{
    SparseMatrix s(ring_, rows_, cols.size());
    for (std::size_t k = 0; k < cols.size(); ++k)
        s.columns_[k] = columns_.at(cols[k]);
    return s;
}

SparseMatrix SparseMatrix::select_rows(const std::vector<std::size_t>& rows) const
{
    std::vector<std::size_t> position(rows_, rows_);
    for (std::size_t k = 0; k < rows.size(); ++k)
        position.at(rows[k]) = k;
    SparseMatrix s(ring_, rows.size(), columns_.size());
    for (std::size_t j = 0; j < columns_.size(); ++j) {
        for (const auto& [i, x] : columns_[j])
            if (position[i] != rows_)
                s.columns_[j].emplace_back(position[i], x);
        std::sort(s.columns_[j].begin(), s.columns_[j].end(),
                  [](const Entry& a, const Entry& b) { return a.first < b.first; });
    }
    return s;
}

Vector SparseMatrix::apply(const Vector& x) const
{
    if (x.size() != columns_.size())
        throw Error(ErrorKind::InvalidInput, "vector length does not match column count");
    Vector y(rows_);
    for (std::size_t j = 0; j < columns_.size(); ++j) {
        if (x[j] == 0)
            continue;
        for (const auto& [i, v] : columns_[j])
            y[i] += v * x[j];
    }
    for (auto& v : y)
        v = ring_.reduce(v);
    return y;
}

SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b)
{
    if (a.cols() != b.rows())
        throw Error(ErrorKind::InvalidInput, "dimension mismatch in matrix product");
    SparseMatrix c(a.ring(), a.rows(), b.cols());
    for (std::size_t j = 0; j < b.cols(); ++j) {
        Vector acc(a.rows());
        for (const auto& [k, x] : b.column(j))
            for (const auto& [i, y] : a.column(k))
                acc[i] += x * y;
        for (std::size_t i = 0; i < acc.size(); ++i)
            if (acc[i] != 0)
                c.set(i, j, acc[i]);
    }
    return c;
}

}  // namespace ccs
