// SPDX-License-Identifier: Apache-2.0

#ifndef MDSLIFT_LIFTING_HPP
#define MDSLIFT_LIFTING_HPP

#include "mdslift/codes.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace mdslift {

/// Maximum multiplicity among the entries.
std::size_t l_statistic(std::span<const FieldElement> diag);

/**
 * Nonsingular diagonal matrix, stored as its diagonal.
 *
 * A distance holder (dh) diagonal has pairwise distinct entries, i.e.
 * l_value() == 1; with l_value() == s it is an s-dh diagonal.
 */
class DhDiagonal {
public:
    explicit DhDiagonal(std::vector<FieldElement> entries);

    const FieldSpec& field() const noexcept { return entries_.front().field(); }
    std::size_t size() const noexcept { return entries_.size(); }
    const std::vector<FieldElement>& entries() const noexcept { return entries_; }
    std::size_t l_value() const noexcept { return l_value_; }
    bool is_dh() const noexcept { return l_value_ == 1; }

    FieldMatrix matrix() const { return FieldMatrix::diagonal(entries_); }

private:
    std::vector<FieldElement> entries_;
    std::size_t l_value_;
};

inline bool is_dh(const DhDiagonal& m) noexcept { return m.is_dh(); }

/**
 * n distinct nonzero elements, drawn without replacement.
 *
 * Each draw r = SplitMix64(seed).uniform(q - 1) selects w^r; repeats are
 * discarded until n distinct entries are collected, kept in draw order.
 */
DhDiagonal sample_dh(const FieldSpec& field, std::size_t n, std::uint64_t seed);

struct LiftOptions {
    bool strict_dh = true;
    bool systematize = false;
};

/// Generator embed(G) * diag(M) over M's field, optionally reduced to [I_k | A].
LinearCode lift(const LinearCode& code, const DhDiagonal& m, LiftOptions options = {});

struct LiftReport {
    std::size_t base_n = 0;
    std::size_t base_k = 0;
    std::size_t lifted_n = 0;
    std::size_t lifted_k = 0;
    bool same_characteristic = false;
    bool dimensions_match = false;
    bool base_mds = false;
    bool lifted_mds = false;
    std::optional<std::size_t> base_distance;
    std::optional<std::size_t> lifted_distance;
    bool distance_checked = false;
    bool distance_match = false;
    bool passed = false;
    std::vector<std::string> failures;
};

LiftReport verify_lift(const LinearCode& base, const LinearCode& lifted,
                       std::uint64_t enumeration_limit = kDefaultEnumerationLimit);

/// binomial(p^t - 1, n), exact.
boost::multiprecision::cpp_int diversity_count(std::uint64_t p, unsigned t, std::uint64_t n);

} // namespace mdslift

#endif // MDSLIFT_LIFTING_HPP
