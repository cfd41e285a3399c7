// SPDX-License-Identifier: Apache-2.0

#ifndef MDSLIFT_LINALG_HPP
#define MDSLIFT_LINALG_HPP

#include "mdslift/gf.hpp"

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace mdslift {

/**
 * Dense row-major matrix over a single field.
 *
 * Entries are stored as packed indices; every entry belongs to field() by
 * construction. Operations return new matrices.
 */
class FieldMatrix {
public:
    /// Zero matrix. rows and cols must be positive.
    FieldMatrix(FieldSpec field, std::size_t rows, std::size_t cols);
    FieldMatrix(FieldSpec field, std::size_t rows, std::size_t cols, std::vector<Index> entries);

    static FieldMatrix identity(const FieldSpec& field, std::size_t n);
    static FieldMatrix diagonal(std::span<const FieldElement> diag);
    /// Integer rows reduced mod p into the prime subfield.
    static FieldMatrix from_integers(const FieldSpec& field,
                                     std::initializer_list<std::initializer_list<std::int64_t>> rows);
    static FieldMatrix from_rows(const std::vector<std::vector<FieldElement>>& rows);

    const FieldSpec& field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    FieldElement at(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, const FieldElement& v);

    Index raw(std::size_t r, std::size_t c) const noexcept { return entries_[r * cols_ + c]; }
    Index& raw(std::size_t r, std::size_t c) noexcept { return entries_[r * cols_ + c]; }
    std::span<const Index> raw_row(std::size_t r) const noexcept { return {entries_.data() + r * cols_, cols_}; }
    const std::vector<Index>& raw_entries() const noexcept { return entries_; }

    std::vector<FieldElement> row(std::size_t r) const;
    std::vector<FieldElement> column(std::size_t c) const;

    FieldMatrix transpose() const;

    friend bool operator==(const FieldMatrix& a, const FieldMatrix& b) noexcept
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_ && a.field_ == b.field_;
    }

private:
    FieldSpec field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Index> entries_;
};

FieldMatrix mat_mul(const FieldMatrix& a, const FieldMatrix& b);
inline FieldMatrix operator*(const FieldMatrix& a, const FieldMatrix& b) { return mat_mul(a, b); }

/// Row vector times matrix.
std::vector<FieldElement> vec_mul(std::span<const FieldElement> v, const FieldMatrix& a);

/// Gaussian elimination with first-nonzero pivoting, no column swaps.
std::size_t rank(const FieldMatrix& a);

FieldMatrix submatrix(const FieldMatrix& a, std::span<const std::size_t> row_indices,
                      std::span<const std::size_t> col_indices);

bool is_nonsingular(const FieldMatrix& a);

/// Unique x with a * x = b for square nonsingular a.
std::vector<FieldElement> solve(const FieldMatrix& a, std::span<const FieldElement> b);

FieldMatrix embed_matrix(const FieldMatrix& a, const FieldSpec& target);

/// Reduced row-echelon form [I_k | A]. Requires full row rank and a
/// nonsingular leading k x k block; columns are never permuted.
FieldMatrix to_systematic(const FieldMatrix& g);

bool is_systematic(const FieldMatrix& g) noexcept;

namespace detail {
/// In-place row reduction of a rows x cols raw block; returns the rank.
/// When reduced is true the result is in reduced row-echelon form.
std::size_t row_reduce(const FieldSpec& f, std::vector<Index>& m, std::size_t rows, std::size_t cols,
                       bool reduced, std::vector<std::size_t>* pivot_cols = nullptr);
} // namespace detail

} // namespace mdslift

#endif // MDSLIFT_LINALG_HPP
