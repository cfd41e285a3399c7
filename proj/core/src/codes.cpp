// SPDX-License-Identifier: Apache-2.0

#include "mdslift/codes.hpp"

#include "mdslift/error.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace mdslift {

LinearCode::LinearCode(FieldMatrix generator, std::optional<std::size_t> distance)
    : generator_(std::move(generator))
{
    if (k() > n())
        raise(ErrorCode::RankDeficient, "k exceeds n");
    if (rank(generator_) != k())
        raise(ErrorCode::RankDeficient, "generator does not have full row rank");
    if (distance)
        record_distance(*distance);
}

LinearCode::LinearCode(const LinearCode& other)
    : generator_(other.generator_), distance_(other.distance_.load(std::memory_order_acquire))
{
}

LinearCode& LinearCode::operator=(const LinearCode& other)
{
    if (this != &other) {
        generator_ = other.generator_;
        distance_.store(other.distance_.load(std::memory_order_acquire), std::memory_order_release);
    }
    return *this;
}

std::optional<std::size_t> LinearCode::known_distance() const noexcept
{
    const std::size_t d = distance_.load(std::memory_order_acquire);
    if (d == 0)
        return std::nullopt;
    return d;
}

void LinearCode::record_distance(std::size_t d) const
{
    if (d < 1 || d > singleton_bound())
        raise(ErrorCode::InvalidArgument, "distance " + std::to_string(d) + " violates the Singleton bound");
    std::size_t expected = 0;
    if (!distance_.compare_exchange_strong(expected, d, std::memory_order_acq_rel) && expected != d)
        raise(ErrorCode::Inconsistent,
              "distance already recorded as " + std::to_string(expected) + ", not " + std::to_string(d));
}

LinearCode grs_generator(const FieldSpec& field, std::span<const FieldElement> alphas,
                         std::span<const FieldElement> vs, std::size_t k)
{
    const std::size_t n = alphas.size();
    if (vs.size() != n)
        raise(ErrorCode::DimensionMismatch, "alphas and multipliers differ in length");
    if (n == 0 || k < 1 || k > n)
        raise(ErrorCode::InvalidArgument, "need 1 <= k <= n");
    if (n > field.order())
        raise(ErrorCode::TooLong, "n = " + std::to_string(n) + " exceeds field order " + std::to_string(field.order()));
    for (std::size_t j = 0; j < n; ++j) {
        if (!(alphas[j].field() == field) || !(vs[j].field() == field))
            raise(ErrorCode::FieldMismatch, "evaluation data not in " + field.describe());
        if (vs[j].is_zero())
            raise(ErrorCode::ZeroMultiplier, "multiplier " + std::to_string(j) + " is zero");
        for (std::size_t i = 0; i < j; ++i) {
            if (alphas[i] == alphas[j])
                raise(ErrorCode::DuplicateAlpha, "alpha " + std::to_string(i) + " equals alpha " + std::to_string(j));
        }
    }
    FieldMatrix g(field, k, n);
    for (std::size_t j = 0; j < n; ++j) {
        Index v = vs[j].index();
        for (std::size_t i = 0; i < k; ++i) {
            g.raw(i, j) = v;
            v = field.mul(v, alphas[j].index());
        }
    }
    return LinearCode(std::move(g));
}

LinearCode grs_default(const FieldSpec& field, std::size_t n, std::size_t k)
{
    if (n > field.order())
        raise(ErrorCode::TooLong, "n = " + std::to_string(n) + " exceeds field order " + std::to_string(field.order()));
    std::vector<FieldElement> alphas;
    std::vector<FieldElement> vs(n, field.one());
    alphas.reserve(n);
    for (std::size_t j = 0; j < n; ++j)
        alphas.push_back(field.element(static_cast<Index>(j)));
    return grs_generator(field, alphas, vs, k);
}

LinearCode example1_code()
{
    const FieldSpec f7 = FieldSpec::prime(7);
    return LinearCode(FieldMatrix::from_integers(f7, {
                                                         {1, 0, 0, 6, 4, 2, 5, 3},
                                                         {0, 1, 0, 3, 1, 5, 1, 3},
                                                         {0, 0, 1, 3, 5, 2, 4, 6},
                                                     }));
}

std::vector<FieldElement> encode_message(const LinearCode& code, std::span<const FieldElement> message)
{
    return vec_mul(message, code.generator());
}

std::size_t hamming_weight(std::span<const FieldElement> word) noexcept
{
    return static_cast<std::size_t>(
        std::count_if(word.begin(), word.end(), [](const FieldElement& e) { return !e.is_zero(); }));
}

std::size_t min_distance(const LinearCode& code, std::uint64_t enumeration_limit)
{
    const FieldSpec& f = code.field();
    const FieldMatrix& g = code.generator();
    const std::size_t n = code.n();
    const std::size_t k = code.k();
    const std::uint64_t q = f.order();

    std::uint64_t total = 1;
    for (std::size_t i = 0; i < k; ++i) {
        if (total > (enumeration_limit + 1) / q)
            raise(ErrorCode::TooManyCodewords, "q^k - 1 exceeds the enumeration limit " +
                                                   std::to_string(enumeration_limit));
        total *= q;
    }
    if (total - 1 > enumeration_limit)
        raise(ErrorCode::TooManyCodewords, "q^k - 1 exceeds the enumeration limit " + std::to_string(enumeration_limit));

    // Messages are enumerated as an odometer over the first k-1 digits; the
    // last digit sweeps the whole field against a table of its row multiples.
    const std::size_t last = k - 1;
    std::vector<Index> table(q * n);
    for (std::uint64_t a = 0; a < q; ++a)
        for (std::size_t j = 0; j < n; ++j)
            table[a * n + j] = f.mul(static_cast<Index>(a), g.raw(last, j));

    std::vector<Index> digits(last, 0);
    std::vector<Index> sums(k * n, 0); // sums[l] = sum of digit_i * row_i for i < l
    std::vector<Index> neg_base(n);
    std::size_t best = std::numeric_limits<std::size_t>::max();

    for (;;) {
        const Index* base = &sums[last * n];
        bool base_zero = true;
        std::size_t base_weight = 0;
        for (std::size_t j = 0; j < n; ++j) {
            neg_base[j] = f.neg(base[j]);
            if (base[j] != 0) {
                base_zero = false;
                ++base_weight;
            }
        }
        if (!base_zero)
            best = std::min(best, base_weight);
        for (std::uint64_t a = 1; a < q; ++a) {
            const Index* row = &table[a * n];
            std::size_t w = 0;
            for (std::size_t j = 0; j < n; ++j)
                w += row[j] != neg_base[j];
            best = std::min(best, w);
        }

        std::size_t pos = last;
        while (pos > 0) {
            --pos;
            if (++digits[pos] < q)
                break;
            digits[pos] = 0;
            if (pos == 0) {
                pos = last;
                break;
            }
        }
        if (pos == last)
            break;
        for (std::size_t l = pos; l < last; ++l) {
            for (std::size_t j = 0; j < n; ++j)
                sums[(l + 1) * n + j] = f.add(sums[l * n + j], f.mul(digits[l], g.raw(l, j)));
        }
    }

    code.record_distance(best);
    return best;
}

std::optional<std::vector<std::size_t>> find_singular_minor(const FieldMatrix& generator)
{
    const std::size_t k = generator.rows();
    const std::size_t n = generator.cols();
    if (k > n)
        return std::vector<std::size_t>{};
    std::vector<std::size_t> cols(k);
    std::iota(cols.begin(), cols.end(), 0);
    std::vector<Index> block(k * k);
    for (;;) {
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
                block[i * k + j] = generator.raw(i, cols[j]);
        if (detail::row_reduce(generator.field(), block, k, k, false) < k)
            return cols;

        std::size_t i = k;
        while (i > 0 && cols[i - 1] == n - k + i - 1)
            --i;
        if (i == 0)
            return std::nullopt;
        ++cols[i - 1];
        for (std::size_t j = i; j < k; ++j)
            cols[j] = cols[j - 1] + 1;
    }
}

bool is_mds(const FieldMatrix& generator) { return !find_singular_minor(generator).has_value(); }

bool is_mds(const LinearCode& code) { return is_mds(code.generator()); }

namespace {

void require_nonzero_scalar(const FieldMatrix& g, const FieldElement& c)
{
    if (!(c.field() == g.field()))
        raise(ErrorCode::FieldMismatch, "scalar not in " + g.field().describe());
    if (c.is_zero())
        raise(ErrorCode::ZeroScalar, "scaling by zero");
}

} // namespace

FieldMatrix scale_row(const FieldMatrix& g, std::size_t i, const FieldElement& c)
{
    require_nonzero_scalar(g, c);
    if (i >= g.rows())
        raise(ErrorCode::IndexOutOfRange, "row " + std::to_string(i));
    FieldMatrix out = g;
    for (std::size_t j = 0; j < g.cols(); ++j)
        out.raw(i, j) = g.field().mul(g.raw(i, j), c.index());
    return out;
}

FieldMatrix scale_col(const FieldMatrix& g, std::size_t j, const FieldElement& c)
{
    require_nonzero_scalar(g, c);
    if (j >= g.cols())
        raise(ErrorCode::IndexOutOfRange, "column " + std::to_string(j));
    FieldMatrix out = g;
    for (std::size_t i = 0; i < g.rows(); ++i)
        out.raw(i, j) = g.field().mul(g.raw(i, j), c.index());
    return out;
}

FieldMatrix monomial_sandwich(const FieldMatrix& d, std::span<const FieldElement> left,
                              std::span<const FieldElement> right)
{
    if (left.size() != d.rows() || right.size() != d.cols())
        raise(ErrorCode::DimensionMismatch, "diagonal sizes do not match the matrix");
    const FieldSpec& f = d.field();
    for (auto diag : {left, right}) {
        for (const FieldElement& e : diag) {
            if (!(e.field() == f))
                raise(ErrorCode::FieldMismatch, "diagonal entry not in " + f.describe());
            if (e.is_zero())
                raise(ErrorCode::ZeroDiagonalEntry, "diagonal entry is zero");
        }
    }
    FieldMatrix out = d;
    for (std::size_t i = 0; i < d.rows(); ++i)
        for (std::size_t j = 0; j < d.cols(); ++j)
            out.raw(i, j) = f.mul(f.mul(left[i].index(), d.raw(i, j)), right[j].index());
    return out;
}

} // namespace mdslift
