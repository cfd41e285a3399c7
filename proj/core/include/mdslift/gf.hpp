// SPDX-License-Identifier: Apache-2.0

#ifndef MDSLIFT_GF_HPP
#define MDSLIFT_GF_HPP

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mdslift {

/// Packed element index: the coordinate vector (c0, ..., c_{t-1}) read as the
/// base-p integer c0 + c1*p + ... + c_{t-1}*p^(t-1).
using Index = std::uint32_t;

inline constexpr std::uint64_t kDefaultDlogLimit = std::uint64_t{1} << 20;
inline constexpr std::uint64_t kMaxFieldOrder = std::uint64_t{1} << 32;

bool is_prime(std::uint64_t n) noexcept;
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

class FieldElement;

namespace detail {
struct FieldData;
}

/**
 * Immutable description of F_p or F_{p^t}.
 *
 * Copies share one underlying table set. Two specs compare equal when they
 * have the same characteristic, degree and modulus, so independently built
 * instances of the same field interoperate.
 */
class FieldSpec {
public:
    static FieldSpec prime(std::uint64_t p);
    /// Smallest (low-degree coefficient first) monic irreducible modulus of
    /// degree t for which x is primitive; the generator is x.
    static FieldSpec extension(std::uint64_t p, unsigned t);
    /// Field defined by an explicit monic irreducible modulus of degree >= 2,
    /// coefficients ascending. The generator is x when primitive, otherwise
    /// the primitive element with the smallest index.
    static FieldSpec with_modulus(std::uint64_t p, std::vector<std::uint32_t> modulus);

    std::uint32_t characteristic() const noexcept;
    unsigned degree() const noexcept;
    std::uint64_t order() const noexcept;
    bool is_prime_field() const noexcept { return degree() == 1; }
    /// Ascending coefficients, length t+1. Empty for prime fields.
    const std::vector<std::uint32_t>& modulus() const noexcept;

    FieldElement generator() const;
    FieldElement zero() const;
    FieldElement one() const;
    FieldElement element(Index index) const;
    FieldElement from_coords(std::span<const std::uint32_t> coords) const;
    /// Image of v mod p in the prime subfield.
    FieldElement from_integer(std::int64_t v) const;
    FieldElement from_power(std::int64_t k) const;

    // Raw arithmetic on indices below order(). No field checks.
    Index add(Index a, Index b) const noexcept;
    Index sub(Index a, Index b) const noexcept;
    Index neg(Index a) const noexcept;
    Index mul(Index a, Index b) const noexcept;
    Index pow(Index a, std::uint64_t e) const noexcept;
    Index inv(Index a) const;
    Index generator_index() const noexcept;
    Index power_index(std::int64_t k) const noexcept;
    Index integer_index(std::int64_t v) const noexcept;
    std::uint64_t dlog(Index a, std::uint64_t limit = kDefaultDlogLimit) const;
    std::vector<std::uint32_t> coords(Index a) const;

    friend bool operator==(const FieldSpec& a, const FieldSpec& b) noexcept;

    std::string describe() const;

private:
    explicit FieldSpec(std::shared_ptr<const detail::FieldData> data) : data_(std::move(data)) {}

    std::shared_ptr<const detail::FieldData> data_;
};

class FieldElement {
public:
    FieldElement(FieldSpec field, Index index);

    const FieldSpec& field() const noexcept { return field_; }
    Index index() const noexcept { return index_; }
    std::vector<std::uint32_t> coords() const { return field_.coords(index_); }
    bool is_zero() const noexcept { return index_ == 0; }

    FieldElement operator-() const;
    FieldElement& operator+=(const FieldElement& o);
    FieldElement& operator-=(const FieldElement& o);
    FieldElement& operator*=(const FieldElement& o);
    FieldElement& operator/=(const FieldElement& o);

    friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
    friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
    friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
    friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }
    friend bool operator==(const FieldElement& a, const FieldElement& b) noexcept
    {
        return a.index_ == b.index_ && a.field_ == b.field_;
    }

private:
    FieldSpec field_;
    Index index_;
};

FieldSpec make_prime_field(std::uint64_t p);
FieldSpec make_extension_field(std::uint64_t p, unsigned t);

FieldElement add(const FieldElement& a, const FieldElement& b);
FieldElement sub(const FieldElement& a, const FieldElement& b);
FieldElement neg(const FieldElement& a);
FieldElement mul(const FieldElement& a, const FieldElement& b);
FieldElement inv(const FieldElement& a);
/// Square-and-multiply; pow(0, 0) is 1.
FieldElement pow(const FieldElement& a, std::uint64_t e);
/// Constant-polynomial image of a prime-field element in a field of the same
/// characteristic. Elements already in target pass through unchanged.
FieldElement embed(const FieldElement& a, const FieldSpec& target);
std::uint64_t dlog(const FieldElement& a, std::uint64_t limit = kDefaultDlogLimit);
FieldElement from_power(const FieldSpec& spec, std::int64_t k);

/// Canonical token: decimal for prime fields, "0" / "1" / "w^k" otherwise.
/// Extension fields beyond the dlog limit fall back to "[c0,...]".
std::string format_element(const FieldElement& a, std::uint64_t dlog_limit = kDefaultDlogLimit);
FieldElement parse_element(const FieldSpec& spec, std::string_view token);

} // namespace mdslift

#endif // MDSLIFT_GF_HPP
