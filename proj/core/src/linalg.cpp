// SPDX-License-Identifier: Apache-2.0

#include "mdslift/linalg.hpp"

#include "mdslift/error.hpp"

#include <utility>

namespace mdslift {

FieldMatrix::FieldMatrix(FieldSpec field, std::size_t rows, std::size_t cols)
    : FieldMatrix(std::move(field), rows, cols, std::vector<Index>(rows * cols, 0))
{
}

FieldMatrix::FieldMatrix(FieldSpec field, std::size_t rows, std::size_t cols, std::vector<Index> entries)
    : field_(std::move(field)), rows_(rows), cols_(cols), entries_(std::move(entries))
{
    if (rows_ == 0 || cols_ == 0)
        raise(ErrorCode::DimensionMismatch, "matrix dimensions must be positive");
    if (entries_.size() != rows_ * cols_)
        raise(ErrorCode::DimensionMismatch, "entry count does not match rows*cols");
    for (Index v : entries_) {
        if (v >= field_.order())
            raise(ErrorCode::InvalidArgument, "matrix entry outside " + field_.describe());
    }
}

FieldMatrix FieldMatrix::identity(const FieldSpec& field, std::size_t n)
{
    FieldMatrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.raw(i, i) = 1;
    return m;
}

FieldMatrix FieldMatrix::diagonal(std::span<const FieldElement> diag)
{
    if (diag.empty())
        raise(ErrorCode::DimensionMismatch, "empty diagonal");
    const FieldSpec& f = diag.front().field();
    FieldMatrix m(f, diag.size(), diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i)
        m.set(i, i, diag[i]);
    return m;
}

FieldMatrix FieldMatrix::from_integers(const FieldSpec& field,
                                       std::initializer_list<std::initializer_list<std::int64_t>> rows)
{
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.begin()->size();
    std::vector<Index> entries;
    entries.reserve(r * c);
    for (const auto& row : rows) {
        if (row.size() != c)
            raise(ErrorCode::DimensionMismatch, "ragged integer rows");
        for (std::int64_t v : row)
            entries.push_back(field.integer_index(v));
    }
    return FieldMatrix(field, r, c, std::move(entries));
}

FieldMatrix FieldMatrix::from_rows(const std::vector<std::vector<FieldElement>>& rows)
{
    if (rows.empty() || rows.front().empty())
        raise(ErrorCode::DimensionMismatch, "matrix dimensions must be positive");
    const FieldSpec& f = rows.front().front().field();
    FieldMatrix m(f, rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols())
            raise(ErrorCode::DimensionMismatch, "ragged rows");
        for (std::size_t j = 0; j < m.cols(); ++j)
            m.set(i, j, rows[i][j]);
    }
    return m;
}

FieldElement FieldMatrix::at(std::size_t r, std::size_t c) const
{
    if (r >= rows_ || c >= cols_)
        raise(ErrorCode::IndexOutOfRange, "matrix index out of range");
    return FieldElement(field_, raw(r, c));
}

void FieldMatrix::set(std::size_t r, std::size_t c, const FieldElement& v)
{
    if (r >= rows_ || c >= cols_)
        raise(ErrorCode::IndexOutOfRange, "matrix index out of range");
    if (!(v.field() == field_))
        raise(ErrorCode::FieldMismatch, v.field().describe() + " entry in " + field_.describe() + " matrix");
    raw(r, c) = v.index();
}

std::vector<FieldElement> FieldMatrix::row(std::size_t r) const
{
    std::vector<FieldElement> out;
    out.reserve(cols_);
    for (std::size_t c = 0; c < cols_; ++c)
        out.push_back(at(r, c));
    return out;
}

std::vector<FieldElement> FieldMatrix::column(std::size_t c) const
{
    std::vector<FieldElement> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        out.push_back(at(r, c));
    return out;
}

FieldMatrix FieldMatrix::transpose() const
{
    FieldMatrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t.raw(c, r) = raw(r, c);
    return t;
}

FieldMatrix mat_mul(const FieldMatrix& a, const FieldMatrix& b)
{
    if (!(a.field() == b.field()))
        raise(ErrorCode::FieldMismatch, a.field().describe() + " times " + b.field().describe());
    if (a.cols() != b.rows())
        raise(ErrorCode::DimensionMismatch, "inner dimensions differ");
    const FieldSpec& f = a.field();
    FieldMatrix out(f, a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t l = 0; l < a.cols(); ++l) {
            const Index x = a.raw(i, l);
            if (x == 0)
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                out.raw(i, j) = f.add(out.raw(i, j), f.mul(x, b.raw(l, j)));
        }
    }
    return out;
}

std::vector<FieldElement> vec_mul(std::span<const FieldElement> v, const FieldMatrix& a)
{
    if (v.size() != a.rows())
        raise(ErrorCode::DimensionMismatch, "vector length " + std::to_string(v.size()) + " vs " +
                                                std::to_string(a.rows()) + " rows");
    const FieldSpec& f = a.field();
    std::vector<Index> acc(a.cols(), 0);
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!(v[i].field() == f))
            raise(ErrorCode::FieldMismatch, "vector entry not in " + f.describe());
        const Index x = v[i].index();
        if (x == 0)
            continue;
        for (std::size_t j = 0; j < a.cols(); ++j)
            acc[j] = f.add(acc[j], f.mul(x, a.raw(i, j)));
    }
    std::vector<FieldElement> out;
    out.reserve(acc.size());
    for (Index x : acc)
        out.emplace_back(f, x);
    return out;
}

namespace detail {

std::size_t row_reduce(const FieldSpec& f, std::vector<Index>& m, std::size_t rows, std::size_t cols, bool reduced,
                       std::vector<std::size_t>* pivot_cols)
{
    std::size_t pivot_row = 0;
    for (std::size_t c = 0; c < cols && pivot_row < rows; ++c) {
        std::size_t r = pivot_row;
        while (r < rows && m[r * cols + c] == 0)
            ++r;
        if (r == rows)
            continue;
        if (r != pivot_row) {
            for (std::size_t j = 0; j < cols; ++j)
                std::swap(m[r * cols + j], m[pivot_row * cols + j]);
        }
        Index* prow = &m[pivot_row * cols];
        const Index s = f.inv(prow[c]);
        for (std::size_t j = c; j < cols; ++j)
            prow[j] = f.mul(prow[j], s);
        const std::size_t first = reduced ? 0 : pivot_row + 1;
        for (std::size_t i = first; i < rows; ++i) {
            if (i == pivot_row)
                continue;
            Index* row = &m[i * cols];
            const Index factor = row[c];
            if (factor == 0)
                continue;
            const Index nf = f.neg(factor);
            for (std::size_t j = c; j < cols; ++j)
                row[j] = f.add(row[j], f.mul(nf, prow[j]));
        }
        if (pivot_cols)
            pivot_cols->push_back(c);
        ++pivot_row;
    }
    return pivot_row;
}

} // namespace detail

std::size_t rank(const FieldMatrix& a)
{
    std::vector<Index> m = a.raw_entries();
    return detail::row_reduce(a.field(), m, a.rows(), a.cols(), false);
}

namespace {

void check_indices(std::span<const std::size_t> idx, std::size_t bound)
{
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (idx[i] >= bound)
            raise(ErrorCode::IndexOutOfRange, "index " + std::to_string(idx[i]) + " >= " + std::to_string(bound));
        if (i > 0 && idx[i] <= idx[i - 1])
            raise(ErrorCode::NotStrictlyIncreasing, "indices must be strictly increasing");
    }
}

} // namespace

FieldMatrix submatrix(const FieldMatrix& a, std::span<const std::size_t> row_indices,
                      std::span<const std::size_t> col_indices)
{
    check_indices(row_indices, a.rows());
    check_indices(col_indices, a.cols());
    FieldMatrix out(a.field(), row_indices.size(), col_indices.size());
    for (std::size_t i = 0; i < row_indices.size(); ++i)
        for (std::size_t j = 0; j < col_indices.size(); ++j)
            out.raw(i, j) = a.raw(row_indices[i], col_indices[j]);
    return out;
}

bool is_nonsingular(const FieldMatrix& a)
{
    if (a.rows() != a.cols())
        raise(ErrorCode::NotSquare, std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
    return rank(a) == a.rows();
}

std::vector<FieldElement> solve(const FieldMatrix& a, std::span<const FieldElement> b)
{
    if (a.rows() != a.cols())
        raise(ErrorCode::NotSquare, std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
    const std::size_t n = a.rows();
    if (b.size() != n)
        raise(ErrorCode::DimensionMismatch, "right-hand side length mismatch");
    const FieldSpec& f = a.field();
    std::vector<Index> aug(n * (n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        if (!(b[i].field() == f))
            raise(ErrorCode::FieldMismatch, "right-hand side not in " + f.describe());
        for (std::size_t j = 0; j < n; ++j)
            aug[i * (n + 1) + j] = a.raw(i, j);
        aug[i * (n + 1) + n] = b[i].index();
    }
    std::vector<std::size_t> pivots;
    detail::row_reduce(f, aug, n, n + 1, true, &pivots);
    if (pivots.size() < n || pivots[n - 1] != n - 1)
        raise(ErrorCode::Singular, "coefficient matrix is singular");
    std::vector<FieldElement> x;
    x.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        x.emplace_back(f, aug[i * (n + 1) + n]);
    return x;
}

FieldMatrix embed_matrix(const FieldMatrix& a, const FieldSpec& target)
{
    const FieldSpec& src = a.field();
    if (src.characteristic() != target.characteristic())
        raise(ErrorCode::CharacteristicMismatch, "cannot embed " + src.describe() + " into " + target.describe());
    if (src == target)
        return a;
    if (!src.is_prime_field())
        raise(ErrorCode::FieldMismatch, "only prime-field matrices can be embedded");
    // Constant polynomials keep their index.
    return FieldMatrix(target, a.rows(), a.cols(), a.raw_entries());
}

FieldMatrix to_systematic(const FieldMatrix& g)
{
    const std::size_t k = g.rows();
    if (k > g.cols())
        raise(ErrorCode::RankDeficient, "more rows than columns");
    std::vector<Index> m = g.raw_entries();
    std::vector<std::size_t> pivots;
    const std::size_t r = detail::row_reduce(g.field(), m, k, g.cols(), true, &pivots);
    if (r < k)
        raise(ErrorCode::RankDeficient, "rank " + std::to_string(r) + " < " + std::to_string(k));
    if (pivots.back() != k - 1)
        raise(ErrorCode::LeadingBlockSingular, "leading " + std::to_string(k) + "x" + std::to_string(k) +
                                                   " block is singular");
    return FieldMatrix(g.field(), k, g.cols(), std::move(m));
}

bool is_systematic(const FieldMatrix& g) noexcept
{
    if (g.rows() > g.cols())
        return false;
    for (std::size_t i = 0; i < g.rows(); ++i)
        for (std::size_t j = 0; j < g.rows(); ++j)
            if (g.raw(i, j) != (i == j ? 1u : 0u))
                return false;
    return true;
}

} // namespace mdslift
