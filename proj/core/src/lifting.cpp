// SPDX-License-Identifier: Apache-2.0

#include "mdslift/lifting.hpp"

#include "mdslift/error.hpp"
#include "mdslift/splitmix.hpp"

#include <algorithm>
#include <unordered_set>

namespace mdslift {

std::size_t l_statistic(std::span<const FieldElement> diag)
{
    if (diag.empty())
        raise(ErrorCode::EmptyDiagonal, "diagonal has no entries");
    std::vector<Index> idx;
    idx.reserve(diag.size());
    for (const FieldElement& e : diag) {
        if (!(e.field() == diag.front().field()))
            raise(ErrorCode::FieldMismatch, "diagonal mixes fields");
        idx.push_back(e.index());
    }
    std::sort(idx.begin(), idx.end());
    std::size_t best = 1;
    std::size_t run = 1;
    for (std::size_t i = 1; i < idx.size(); ++i) {
        run = idx[i] == idx[i - 1] ? run + 1 : 1;
        best = std::max(best, run);
    }
    return best;
}

DhDiagonal::DhDiagonal(std::vector<FieldElement> entries) : entries_(std::move(entries)), l_value_(0)
{
    l_value_ = l_statistic(entries_);
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (entries_[i].is_zero())
            raise(ErrorCode::ZeroDiagonalEntry, "diagonal entry " + std::to_string(i) + " is zero");
    }
}

DhDiagonal sample_dh(const FieldSpec& field, std::size_t n, std::uint64_t seed)
{
    const std::uint64_t nonzero = field.order() - 1;
    if (n > nonzero)
        raise(ErrorCode::FieldTooSmall, field.describe() + " has only " + std::to_string(nonzero) +
                                            " nonzero elements, need " + std::to_string(n));
    if (n == 0)
        raise(ErrorCode::EmptyDiagonal, "diagonal has no entries");
    SplitMix64 rng(seed);
    std::unordered_set<std::uint64_t> seen;
    std::vector<FieldElement> entries;
    entries.reserve(n);
    while (entries.size() < n) {
        const std::uint64_t r = rng.uniform(nonzero);
        if (seen.insert(r).second)
            entries.push_back(field.from_power(static_cast<std::int64_t>(r)));
    }
    return DhDiagonal(std::move(entries));
}

LinearCode lift(const LinearCode& code, const DhDiagonal& m, LiftOptions options)
{
    const FieldSpec& target = m.field();
    if (code.field().characteristic() != target.characteristic())
        raise(ErrorCode::CharacteristicMismatch,
              "base code over " + code.field().describe() + ", diagonal over " + target.describe());
    if (m.size() != code.n())
        raise(ErrorCode::DimensionMismatch,
              "diagonal has " + std::to_string(m.size()) + " entries, code length is " + std::to_string(code.n()));
    if (target.order() <= code.n())
        raise(ErrorCode::FieldTooSmall, "need p^t > n, have " + std::to_string(target.order()) +
                                            " <= " + std::to_string(code.n()));
    if (options.strict_dh && !m.is_dh())
        raise(ErrorCode::NotDh, "diagonal is " + std::to_string(m.l_value()) + "-dh, not dh");

    FieldMatrix g = embed_matrix(code.generator(), target);
    for (std::size_t j = 0; j < g.cols(); ++j) {
        const Index s = m.entries()[j].index();
        for (std::size_t i = 0; i < g.rows(); ++i)
            g.raw(i, j) = target.mul(g.raw(i, j), s);
    }
    if (options.systematize)
        g = to_systematic(g);
    return LinearCode(std::move(g));
}

namespace {

bool within_limit(const LinearCode& code, std::uint64_t limit)
{
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < code.k(); ++i) {
        if (total > (limit + 1) / code.field().order())
            return false;
        total *= code.field().order();
    }
    return total - 1 <= limit;
}

} // namespace

LiftReport verify_lift(const LinearCode& base, const LinearCode& lifted, std::uint64_t enumeration_limit)
{
    LiftReport r;
    r.base_n = base.n();
    r.base_k = base.k();
    r.lifted_n = lifted.n();
    r.lifted_k = lifted.k();
    r.same_characteristic = base.field().characteristic() == lifted.field().characteristic();
    if (!r.same_characteristic)
        r.failures.push_back("characteristic differs");
    r.dimensions_match = r.base_n == r.lifted_n && r.base_k == r.lifted_k;
    if (r.base_n != r.lifted_n)
        r.failures.push_back("n mismatch: " + std::to_string(r.base_n) + " vs " + std::to_string(r.lifted_n));
    if (r.base_k != r.lifted_k)
        r.failures.push_back("k mismatch: " + std::to_string(r.base_k) + " vs " + std::to_string(r.lifted_k));

    r.base_mds = is_mds(base);
    r.lifted_mds = is_mds(lifted);
    if (!r.lifted_mds)
        r.failures.push_back("lifted code is not MDS");

    if (r.dimensions_match && within_limit(base, enumeration_limit) && within_limit(lifted, enumeration_limit)) {
        r.base_distance = min_distance(base, enumeration_limit);
        r.lifted_distance = min_distance(lifted, enumeration_limit);
        r.distance_checked = true;
        r.distance_match = *r.base_distance == *r.lifted_distance;
        if (!r.distance_match)
            r.failures.push_back("distance changed: " + std::to_string(*r.base_distance) + " -> " +
                                 std::to_string(*r.lifted_distance));
    }
    r.passed = r.failures.empty();
    return r;
}

boost::multiprecision::cpp_int diversity_count(std::uint64_t p, unsigned t, std::uint64_t n)
{
    using boost::multiprecision::cpp_int;
    if (!is_prime(p))
        raise(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
    if (t < 1)
        raise(ErrorCode::DegreeTooSmall, "degree must be at least 1");
    const cpp_int q = boost::multiprecision::pow(cpp_int(p), t);
    if (q <= n)
        raise(ErrorCode::FieldTooSmall, "need p^t > n");
    // binomial(N, m) as the falling factorial N^(m) over m!, one exact division.
    const cpp_int big_n = q - 1;
    const cpp_int rest = big_n - n;
    const std::uint64_t m = rest < n ? rest.convert_to<std::uint64_t>() : n;
    cpp_int numerator = 1;
    cpp_int denominator = 1;
    for (std::uint64_t i = 0; i < m; ++i) {
        numerator *= big_n - i;
        denominator *= i + 1;
    }
    return numerator / denominator;
}

} // namespace mdslift
