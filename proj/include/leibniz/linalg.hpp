#pragma once

#include "leibniz/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace leibniz {

/// Thrown when an internal mathematical contract fails (image not inside a
/// kernel, invariants not preserved, ...). Always indicates a bug or
/// inconsistent input, never a recoverable condition.
class ContractViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Dense row-major matrix over the rationals.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
        : rows_(rows), cols_(cols), data_(std::move(entries))
    {
        if (data_.size() != rows_ * cols_)
            throw std::invalid_argument("RationalMatrix: entry count does not match shape");
    }

    static RationalMatrix identity(std::size_t n)
    {
        RationalMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = 1;
        return m;
    }

    /// Builds a matrix from nested integer/rational rows, mainly for tests.
    static RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows)
    {
        const std::size_t r = rows.size();
        const std::size_t c = r == 0 ? 0 : rows.front().size();
        RationalMatrix m(r, c);
        for (std::size_t i = 0; i < r; ++i) {
            if (rows[i].size() != c)
                throw std::invalid_argument("RationalMatrix::from_rows: ragged rows");
            for (std::size_t j = 0; j < c; ++j)
                m(i, j) = rows[i][j];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    const std::vector<Rational>& entries() const { return data_; }

    Vector row(std::size_t i) const
    {
        return Vector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                      data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
    }

    Vector column(std::size_t j) const
    {
        Vector v(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            v[i] = (*this)(i, j);
        return v;
    }

    RationalMatrix transpose() const
    {
        RationalMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                t(j, i) = (*this)(i, j);
        return t;
    }

    Vector apply(const Vector& x) const
    {
        if (x.size() != cols_)
            throw std::invalid_argument("RationalMatrix::apply: dimension mismatch");
        Vector y(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (sgn((*this)(i, j)) != 0 && sgn(x[j]) != 0)
                    y[i] += (*this)(i, j) * x[j];
        return y;
    }

    bool is_zero() const
    {
        return std::all_of(data_.begin(), data_.end(), [](const Rational& r) { return sgn(r) == 0; });
    }

    friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b)
    {
        if (a.cols_ != b.rows_)
            throw std::invalid_argument("RationalMatrix product: dimension mismatch");
        RationalMatrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Rational& aik = a(i, k);
                if (sgn(aik) == 0)
                    continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    if (sgn(b(k, j)) != 0)
                        c(i, j) += aik * b(k, j);
            }
        return c;
    }

    friend RationalMatrix operator+(RationalMatrix a, const RationalMatrix& b)
    {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("RationalMatrix sum: dimension mismatch");
        for (std::size_t i = 0; i < a.data_.size(); ++i)
            a.data_[i] += b.data_[i];
        return a;
    }

    friend RationalMatrix operator-(RationalMatrix a, const RationalMatrix& b)
    {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("RationalMatrix difference: dimension mismatch");
        for (std::size_t i = 0; i < a.data_.size(); ++i)
            a.data_[i] -= b.data_[i];
        return a;
    }

    friend RationalMatrix operator*(const Rational& s, RationalMatrix a)
    {
        for (auto& x : a.data_)
            x *= s;
        return a;
    }

    friend bool operator==(const RationalMatrix& a, const RationalMatrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/// Row-compressed sparse matrix. Each row holds (column, value) pairs sorted
/// by column with no explicit zeros. Coboundary operators are assembled in
/// this form because their rows have a handful of entries.
class SparseMatrix {
public:
    using Entry = std::pair<std::size_t, Rational>;
    using Row = std::vector<Entry>;

    SparseMatrix() = default;
    SparseMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows) {}

    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }

    const Row& row(std::size_t i) const { return rows_[i]; }

    /// Replaces row i; entries may be unsorted, duplicated or zero.
    void set_row(std::size_t i, Row entries)
    {
        std::sort(entries.begin(), entries.end(),
                  [](const Entry& a, const Entry& b) { return a.first < b.first; });
        Row merged;
        merged.reserve(entries.size());
        for (auto& [c, v] : entries) {
            if (c >= cols_)
                throw std::out_of_range("SparseMatrix::set_row: column out of range");
            if (!merged.empty() && merged.back().first == c)
                merged.back().second += v;
            else
                merged.emplace_back(c, std::move(v));
        }
        std::erase_if(merged, [](const Entry& e) { return sgn(e.second) == 0; });
        rows_[i] = std::move(merged);
    }

    std::size_t nonzeros() const
    {
        std::size_t n = 0;
        for (const auto& r : rows_)
            n += r.size();
        return n;
    }

    bool is_zero() const
    {
        return std::all_of(rows_.begin(), rows_.end(), [](const Row& r) { return r.empty(); });
    }

    Rational at(std::size_t i, std::size_t j) const
    {
        for (const auto& [c, v] : rows_[i])
            if (c == j)
                return v;
        return 0;
    }

    Vector apply(const Vector& x) const
    {
        if (x.size() != cols_)
            throw std::invalid_argument("SparseMatrix::apply: dimension mismatch");
        Vector y(rows_.size());
        for (std::size_t i = 0; i < rows_.size(); ++i)
            for (const auto& [c, v] : rows_[i])
                if (sgn(x[c]) != 0)
                    y[i] += v * x[c];
        return y;
    }

    RationalMatrix to_dense() const
    {
        RationalMatrix m(rows_.size(), cols_);
        for (std::size_t i = 0; i < rows_.size(); ++i)
            for (const auto& [c, v] : rows_[i])
                m(i, c) = v;
        return m;
    }

    static SparseMatrix from_dense(const RationalMatrix& m)
    {
        SparseMatrix s(m.rows(), m.cols());
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j)
                if (sgn(m(i, j)) != 0)
                    s.rows_[i].emplace_back(j, m(i, j));
        return s;
    }

    /// Copies `block` scaled by `scale` into this matrix at the given offset.
    /// Overlapping entries are added.
    void add_block(std::size_t row_offset, std::size_t col_offset, const SparseMatrix& block,
                   const Rational& scale = 1)
    {
        if (row_offset + block.rows() > rows() || col_offset + block.cols() > cols_)
            throw std::out_of_range("SparseMatrix::add_block: block does not fit");
        for (std::size_t i = 0; i < block.rows(); ++i) {
            if (block.rows_[i].empty())
                continue;
            Row combined = rows_[row_offset + i];
            for (const auto& [c, v] : block.rows_[i])
                combined.emplace_back(col_offset + c, scale * v);
            set_row(row_offset + i, std::move(combined));
        }
    }

    friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b)
    {
        if (a.cols_ != b.rows())
            throw std::invalid_argument("SparseMatrix product: dimension mismatch");
        SparseMatrix c(a.rows(), b.cols_);
        std::map<std::size_t, Rational> acc;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            acc.clear();
            for (const auto& [k, av] : a.rows_[i])
                for (const auto& [j, bv] : b.rows_[k])
                    acc[j] += av * bv;
            Row out;
            for (auto& [j, v] : acc)
                if (sgn(v) != 0)
                    out.emplace_back(j, std::move(v));
            c.rows_[i] = std::move(out);
        }
        return c;
    }

    friend SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b)
    {
        if (a.rows() != b.rows() || a.cols_ != b.cols_)
            throw std::invalid_argument("SparseMatrix sum: dimension mismatch");
        SparseMatrix c = a;
        c.add_block(0, 0, b);
        return c;
    }

    friend SparseMatrix operator*(const Rational& s, SparseMatrix a)
    {
        if (sgn(s) == 0)
            return SparseMatrix(a.rows(), a.cols_);
        for (auto& r : a.rows_)
            for (auto& e : r)
                e.second *= s;
        return a;
    }

    friend bool operator==(const SparseMatrix& a, const SparseMatrix& b)
    {
        return a.cols_ == b.cols_ && a.rows_ == b.rows_;
    }

private:
    std::size_t cols_ = 0;
    std::vector<Row> rows_;
};

struct RrefResult {
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;
    RationalMatrix reduced;
};

/// Reduced row echelon form by Gauss-Jordan elimination. The pivot in each
/// column is the first row (at or below the current rank) with a nonzero
/// entry, so the output is fully deterministic.
inline RrefResult rref(RationalMatrix m)
{
    RrefResult out;
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::size_t r = 0;
    std::vector<std::size_t> support;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && sgn(m(piv, c)) == 0)
            ++piv;
        if (piv == rows)
            continue;
        if (piv != r)
            for (std::size_t j = c; j < cols; ++j)
                std::swap(m(piv, j), m(r, j));

        const Rational inv = 1 / m(r, c);
        support.clear();
        for (std::size_t j = c; j < cols; ++j)
            if (sgn(m(r, j)) != 0) {
                m(r, j) *= inv;
                support.push_back(j);
            }

        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || sgn(m(i, c)) == 0)
                continue;
            const Rational f = m(i, c);
            for (std::size_t j : support)
                m(i, j) -= f * m(r, j);
        }
        out.pivots.push_back(c);
        ++r;
    }
    out.rank = r;
    out.reduced = std::move(m);
    return out;
}

inline std::size_t rank(const RationalMatrix& m) { return rref(m).rank; }

/// Rank of a sparse matrix by sparse elimination. Pivot order is irrelevant
/// for the rank, so rows are reduced against previously found pivot rows.
inline std::size_t rank(const SparseMatrix& m)
{
    using Row = SparseMatrix::Row;
    std::map<std::size_t, Row> pivot_rows;  // leading column -> row with leading entry 1
    Row scratch;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Row row = m.row(i);
        while (!row.empty()) {
            auto it = pivot_rows.find(row.front().first);
            if (it == pivot_rows.end()) {
                const Rational inv = 1 / row.front().second;
                for (auto& e : row)
                    e.second *= inv;
                pivot_rows.emplace(row.front().first, std::move(row));
                break;
            }
            const Rational f = row.front().second;
            const Row& p = it->second;
            scratch.clear();
            std::size_t a = 0, b = 0;
            while (a < row.size() || b < p.size()) {
                if (b == p.size() || (a < row.size() && row[a].first < p[b].first)) {
                    scratch.push_back(std::move(row[a++]));
                } else if (a == row.size() || p[b].first < row[a].first) {
                    scratch.emplace_back(p[b].first, -f * p[b].second);
                    ++b;
                } else {
                    Rational v = row[a].second - f * p[b].second;
                    if (sgn(v) != 0)
                        scratch.emplace_back(row[a].first, std::move(v));
                    ++a;
                    ++b;
                }
            }
            row.swap(scratch);
        }
    }
    return pivot_rows.size();
}

/// A linearly independent family of vectors in a fixed ambient space.
/// The reduced row echelon form of the family is cached for reduction.
class SubspaceBasis {
public:
    explicit SubspaceBasis(std::size_t ambient_dim) : ambient_dim_(ambient_dim) {}

    SubspaceBasis(std::size_t ambient_dim, std::vector<Vector> vectors)
        : ambient_dim_(ambient_dim), vectors_(std::move(vectors))
    {
        RationalMatrix m(vectors_.size(), ambient_dim_);
        for (std::size_t i = 0; i < vectors_.size(); ++i) {
            if (vectors_[i].size() != ambient_dim_)
                throw std::invalid_argument("SubspaceBasis: vector has wrong ambient dimension");
            for (std::size_t j = 0; j < ambient_dim_; ++j)
                m(i, j) = vectors_[i][j];
        }
        auto r = rref(std::move(m));
        if (r.rank != vectors_.size())
            throw std::invalid_argument("SubspaceBasis: vectors are linearly dependent");
        pivots_ = std::move(r.pivots);
        echelon_.reserve(pivots_.size());
        for (std::size_t i = 0; i < pivots_.size(); ++i)
            echelon_.push_back(r.reduced.row(i));
    }

    std::size_t ambient_dim() const { return ambient_dim_; }
    std::size_t dim() const { return vectors_.size(); }
    const std::vector<Vector>& vectors() const { return vectors_; }

    /// Rows of the reduced row echelon form spanning the same subspace.
    const std::vector<Vector>& echelon() const { return echelon_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    /// Canonical representative of v + span: every pivot coordinate of the
    /// echelon form is eliminated.
    Vector reduce(Vector v) const
    {
        if (v.size() != ambient_dim_)
            throw std::invalid_argument("SubspaceBasis::reduce: dimension mismatch");
        for (std::size_t i = 0; i < pivots_.size(); ++i) {
            const Rational f = v[pivots_[i]];
            if (sgn(f) == 0)
                continue;
            const Vector& e = echelon_[i];
            for (std::size_t j = 0; j < ambient_dim_; ++j)
                if (sgn(e[j]) != 0)
                    v[j] -= f * e[j];
        }
        return v;
    }

    bool contains(const Vector& v) const { return is_zero(reduce(v)); }

private:
    std::size_t ambient_dim_ = 0;
    std::vector<Vector> vectors_;
    std::vector<Vector> echelon_;
    std::vector<std::size_t> pivots_;
};

/// Basis of {v : m v = 0}, one vector per free column with a 1 in that
/// column and the negated reduced entries in the pivot columns.
inline SubspaceBasis kernel_basis(const RationalMatrix& m)
{
    const auto r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : r.pivots)
        is_pivot[c] = true;
    std::vector<Vector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free])
            continue;
        Vector v(m.cols());
        v[free] = 1;
        for (std::size_t i = 0; i < r.rank; ++i)
            v[r.pivots[i]] = -r.reduced(i, free);
        basis.push_back(std::move(v));
    }
    return SubspaceBasis(m.cols(), std::move(basis));
}

/// Basis of the column space of m (reduced row echelon rows of m^T).
inline SubspaceBasis image_basis(const RationalMatrix& m)
{
    const auto r = rref(m.transpose());
    std::vector<Vector> basis;
    for (std::size_t i = 0; i < r.rank; ++i)
        basis.push_back(r.reduced.row(i));
    return SubspaceBasis(m.rows(), std::move(basis));
}

/// Canonical particular solution of m x = b: pivot coordinates take the
/// reduced right-hand side, free coordinates are zero. Empty if inconsistent.
inline std::optional<Vector> solve(const RationalMatrix& m, const Vector& b)
{
    if (b.size() != m.rows())
        throw std::invalid_argument("solve: right-hand side has wrong length");
    RationalMatrix aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j)
            aug(i, j) = m(i, j);
        aug(i, m.cols()) = b[i];
    }
    const auto r = rref(std::move(aug));
    if (!r.pivots.empty() && r.pivots.back() == m.cols())
        return std::nullopt;
    Vector x(m.cols());
    for (std::size_t i = 0; i < r.rank; ++i)
        x[r.pivots[i]] = r.reduced(i, m.cols());
    return x;
}

/// dim Z - dim B, after checking that B lies inside Z.
inline std::size_t quotient_dim(const SubspaceBasis& z, const SubspaceBasis& b)
{
    if (z.ambient_dim() != b.ambient_dim())
        throw std::invalid_argument("quotient_dim: ambient dimensions differ");
    for (const auto& v : b.vectors())
        if (!z.contains(v))
            throw ContractViolation("quotient_dim: subspace is not contained in the ambient subspace");
    return z.dim() - b.dim();
}

inline Vector reduce_mod_subspace(const Vector& v, const SubspaceBasis& b) { return b.reduce(v); }

} // namespace leibniz
