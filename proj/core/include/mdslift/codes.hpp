// SPDX-License-Identifier: Apache-2.0

#ifndef MDSLIFT_CODES_HPP
#define MDSLIFT_CODES_HPP

#include "mdslift/linalg.hpp"

#include <atomic>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace mdslift {

inline constexpr std::uint64_t kDefaultEnumerationLimit = std::uint64_t{1} << 26;

/**
 * Linear [n, k, d] code given by a full-row-rank k x n generator.
 *
 * The minimum distance is cached with set-once semantics: recording the same
 * value again is a no-op, recording a different one raises Inconsistent.
 */
class LinearCode {
public:
    explicit LinearCode(FieldMatrix generator, std::optional<std::size_t> distance = std::nullopt);
    LinearCode(const LinearCode& other);
    LinearCode& operator=(const LinearCode& other);

    const FieldSpec& field() const noexcept { return generator_.field(); }
    const FieldMatrix& generator() const noexcept { return generator_; }
    std::size_t n() const noexcept { return generator_.cols(); }
    std::size_t k() const noexcept { return generator_.rows(); }
    std::size_t singleton_bound() const noexcept { return n() - k() + 1; }

    std::optional<std::size_t> known_distance() const noexcept;
    void record_distance(std::size_t d) const;

private:
    FieldMatrix generator_;
    mutable std::atomic<std::size_t> distance_{0}; // 0 means unknown
};

/// Generalized Reed-Solomon generator, entry (i, j) = vs[j] * alphas[j]^i.
LinearCode grs_generator(const FieldSpec& field, std::span<const FieldElement> alphas,
                         std::span<const FieldElement> vs, std::size_t k);
/// GRS with alphas = the first n elements by index and all multipliers 1.
LinearCode grs_default(const FieldSpec& field, std::size_t n, std::size_t k);

/// The [8,3,6] systematic generator over F_7 used as the lifting fixture.
LinearCode example1_code();

std::vector<FieldElement> encode_message(const LinearCode& code, std::span<const FieldElement> message);

std::size_t hamming_weight(std::span<const FieldElement> word) noexcept;

/// Exact minimum nonzero codeword weight by enumerating all q^k - 1 nonzero
/// messages. Records the result on the code.
std::size_t min_distance(const LinearCode& code, std::uint64_t enumeration_limit = kDefaultEnumerationLimit);

/// First k-column subset (ascending) whose k x k block is singular, if any.
std::optional<std::vector<std::size_t>> find_singular_minor(const FieldMatrix& generator);

/// Every k-column block of the generator is nonsingular.
bool is_mds(const LinearCode& code);
bool is_mds(const FieldMatrix& generator);

FieldMatrix scale_row(const FieldMatrix& g, std::size_t i, const FieldElement& c);
FieldMatrix scale_col(const FieldMatrix& g, std::size_t j, const FieldElement& c);

/// diag(left) * d * diag(right).
FieldMatrix monomial_sandwich(const FieldMatrix& d, std::span<const FieldElement> left,
                              std::span<const FieldElement> right);

} // namespace mdslift

#endif // MDSLIFT_CODES_HPP
