// SPDX-License-Identifier: Apache-2.0

#include "mdslift/gf.hpp"

#include "mdslift/error.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <mutex>
#include <sstream>

namespace mdslift {

bool is_prime(std::uint64_t n) noexcept
{
    if (n < 2)
        return false;
    if (n % 2 == 0)
        return n == 2;
    for (std::uint64_t d = 3; d <= n / d; d += 2) {
        if (n % d == 0)
            return false;
    }
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n)
{
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d <= n / d; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0)
                n /= d;
        }
    }
    if (n > 1)
        out.push_back(n);
    return out;
}

namespace detail {

// Degree is bounded by 32 because p >= 2 and p^t <= 2^32.
constexpr unsigned kMaxDegree = 32;
using Poly = std::array<std::uint64_t, 2 * kMaxDegree>;

struct FieldData {
    std::uint32_t p = 0;
    unsigned t = 1;
    std::uint64_t q = 0;
    std::vector<std::uint32_t> modulus;
    std::vector<std::uint64_t> group_order_factors;
    Index gen = 1;

    mutable std::once_flag log_once;
    mutable std::vector<std::uint32_t> log_table;

    void unpack(Index a, Poly& out) const noexcept
    {
        for (unsigned i = 0; i < t; ++i) {
            out[i] = a % p;
            a /= p;
        }
    }

    Index pack(const Poly& c) const noexcept
    {
        std::uint64_t v = 0;
        for (unsigned i = t; i-- > 0;)
            v = v * p + c[i];
        return static_cast<Index>(v);
    }

    Index add(Index a, Index b) const noexcept
    {
        if (t == 1)
            return static_cast<Index>((std::uint64_t{a} + b) % p);
        if (p == 2)
            return a ^ b;
        std::uint64_t out = 0;
        std::uint64_t scale = 1;
        for (unsigned i = 0; i < t; ++i) {
            const std::uint64_t s = (a % p + b % p) % p;
            out += s * scale;
            scale *= p;
            a /= p;
            b /= p;
        }
        return static_cast<Index>(out);
    }

    Index neg(Index a) const noexcept
    {
        if (t == 1)
            return a == 0 ? 0 : p - a;
        if (p == 2)
            return a;
        std::uint64_t out = 0;
        std::uint64_t scale = 1;
        for (unsigned i = 0; i < t; ++i) {
            const std::uint64_t c = a % p;
            out += (c == 0 ? 0 : p - c) * scale;
            scale *= p;
            a /= p;
        }
        return static_cast<Index>(out);
    }

    Index mul(Index a, Index b) const noexcept
    {
        if (t == 1)
            return static_cast<Index>((std::uint64_t{a} * b) % p);
        Poly x{}, y{}, prod{};
        unpack(a, x);
        unpack(b, y);
        for (unsigned i = 0; i < t; ++i) {
            if (x[i] == 0)
                continue;
            for (unsigned j = 0; j < t; ++j)
                prod[i + j] = (prod[i + j] + x[i] * y[j] % p) % p;
        }
        // Reduce by the monic modulus from the top degree down.
        for (unsigned d = 2 * t - 2; d >= t; --d) {
            const std::uint64_t c = prod[d];
            if (c == 0)
                continue;
            prod[d] = 0;
            for (unsigned i = 0; i < t; ++i) {
                const std::uint64_t sub = c * modulus[i] % p;
                prod[d - t + i] = (prod[d - t + i] + p - sub) % p;
            }
        }
        return pack(prod);
    }

    Index pow(Index a, std::uint64_t e) const noexcept
    {
        Index result = 1;
        Index base = a;
        while (e > 0) {
            if (e & 1)
                result = mul(result, base);
            base = mul(base, base);
            e >>= 1;
        }
        return result;
    }

    bool has_full_order(Index a) const noexcept
    {
        if (a == 0)
            return false;
        if (pow(a, q - 1) != 1)
            return false;
        for (std::uint64_t r : group_order_factors) {
            if (pow(a, (q - 1) / r) == 1)
                return false;
        }
        return true;
    }

    void build_log_table() const
    {
        log_table.assign(q, 0);
        Index cur = 1;
        for (std::uint64_t k = 0; k + 1 < q; ++k) {
            log_table[cur] = static_cast<std::uint32_t>(k);
            cur = mul(cur, gen);
        }
    }
};

} // namespace detail

namespace {

using detail::FieldData;
using detail::Poly;

std::uint64_t checked_order(std::uint64_t p, unsigned t)
{
    std::uint64_t q = 1;
    for (unsigned i = 0; i < t; ++i) {
        if (q > kMaxFieldOrder / p)
            raise(ErrorCode::FieldTooLarge, "p^t exceeds 2^32");
        q *= p;
    }
    return q;
}

// Remainder of f modulo the monic divisor g (ascending coefficients) is zero.
bool divides(const std::vector<std::uint64_t>& g, std::vector<std::uint64_t> f, std::uint64_t p)
{
    const std::size_t dg = g.size() - 1;
    for (std::size_t i = f.size() - 1; i >= dg; --i) {
        const std::uint64_t c = f[i];
        if (c != 0) {
            for (std::size_t j = 0; j <= dg; ++j)
                f[i - dg + j] = (f[i - dg + j] + p - c * g[j] % p) % p;
        }
        if (i == dg)
            break;
    }
    return std::all_of(f.begin(), f.begin() + static_cast<std::ptrdiff_t>(dg), [](std::uint64_t c) { return c == 0; });
}

// Trial division by every monic polynomial of degree 1..t/2.
bool is_irreducible(const std::vector<std::uint32_t>& modulus, std::uint64_t p)
{
    const std::size_t t = modulus.size() - 1;
    const std::vector<std::uint64_t> f(modulus.begin(), modulus.end());
    for (std::size_t d = 1; d <= t / 2; ++d) {
        std::vector<std::uint64_t> g(d + 1, 0);
        g[d] = 1;
        for (;;) {
            if (divides(g, f, p))
                return false;
            std::size_t i = 0;
            while (i < d && ++g[i] == p)
                g[i++] = 0;
            if (i == d)
                break;
        }
    }
    return true;
}

std::shared_ptr<FieldData> base_data(std::uint64_t p, unsigned t)
{
    if (!is_prime(p))
        raise(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
    auto data = std::make_shared<FieldData>();
    data->q = checked_order(p, t);
    data->p = static_cast<std::uint32_t>(p);
    data->t = t;
    data->group_order_factors = prime_factors(data->q - 1);
    return data;
}

} // namespace

FieldSpec FieldSpec::prime(std::uint64_t p)
{
    auto data = base_data(p, 1);
    if (p == 2) {
        data->gen = 1;
    } else {
        Index g = 2;
        while (!data->has_full_order(g))
            ++g;
        data->gen = g;
    }
    return FieldSpec(std::move(data));
}

FieldSpec FieldSpec::extension(std::uint64_t p, unsigned t)
{
    if (!is_prime(p))
        raise(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
    if (t < 2)
        raise(ErrorCode::DegreeTooSmall, "extension degree must be at least 2");
    auto data = base_data(p, t);
    data->modulus.assign(t + 1, 0);
    data->modulus[t] = 1;
    const Index x = data->p;

    // Lexicographic over (c0, c1, ..., c_{t-1}) with c0 most significant.
    std::vector<std::uint32_t> c(t, 0);
    c[0] = 1;
    for (;;) {
        std::copy(c.begin(), c.end(), data->modulus.begin());
        if (data->has_full_order(x) && is_irreducible(data->modulus, p)) {
            data->gen = x;
            return FieldSpec(std::move(data));
        }
        std::size_t i = t;
        while (i-- > 0) {
            if (++c[i] < p)
                break;
            c[i] = 0;
        }
        if (i == static_cast<std::size_t>(-1) || c[0] == 0)
            break;
    }
    raise(ErrorCode::NotIrreducible, "no primitive modulus found");
}

FieldSpec FieldSpec::with_modulus(std::uint64_t p, std::vector<std::uint32_t> modulus)
{
    if (!is_prime(p))
        raise(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
    if (modulus.size() < 3)
        raise(ErrorCode::DegreeTooSmall, "modulus degree must be at least 2");
    const unsigned t = static_cast<unsigned>(modulus.size() - 1);
    if (modulus.back() != 1)
        raise(ErrorCode::NotIrreducible, "modulus must be monic");
    for (std::uint32_t c : modulus) {
        if (c >= p)
            raise(ErrorCode::InvalidArgument, "modulus coefficient out of range");
    }
    auto data = base_data(p, t);
    if (!is_irreducible(modulus, p))
        raise(ErrorCode::NotIrreducible, "modulus is reducible");
    data->modulus = std::move(modulus);
    const Index x = data->p;
    if (data->has_full_order(x)) {
        data->gen = x;
    } else {
        Index g = 2;
        while (!data->has_full_order(g))
            ++g;
        data->gen = g;
    }
    return FieldSpec(std::move(data));
}

std::uint32_t FieldSpec::characteristic() const noexcept { return data_->p; }
unsigned FieldSpec::degree() const noexcept { return data_->t; }
std::uint64_t FieldSpec::order() const noexcept { return data_->q; }
const std::vector<std::uint32_t>& FieldSpec::modulus() const noexcept { return data_->modulus; }

FieldElement FieldSpec::generator() const { return FieldElement(*this, data_->gen); }
FieldElement FieldSpec::zero() const { return FieldElement(*this, 0); }
FieldElement FieldSpec::one() const { return FieldElement(*this, 1); }
FieldElement FieldSpec::element(Index index) const { return FieldElement(*this, index); }

FieldElement FieldSpec::from_coords(std::span<const std::uint32_t> coords) const
{
    if (coords.size() != data_->t)
        raise(ErrorCode::InvalidArgument, "expected " + std::to_string(data_->t) + " coordinates");
    Poly c{};
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (coords[i] >= data_->p)
            raise(ErrorCode::InvalidArgument, "coordinate out of range");
        c[i] = coords[i];
    }
    return FieldElement(*this, data_->pack(c));
}

FieldElement FieldSpec::from_integer(std::int64_t v) const { return FieldElement(*this, integer_index(v)); }
FieldElement FieldSpec::from_power(std::int64_t k) const { return FieldElement(*this, power_index(k)); }

Index FieldSpec::add(Index a, Index b) const noexcept { return data_->add(a, b); }
Index FieldSpec::sub(Index a, Index b) const noexcept { return data_->add(a, data_->neg(b)); }
Index FieldSpec::neg(Index a) const noexcept { return data_->neg(a); }
Index FieldSpec::mul(Index a, Index b) const noexcept { return data_->mul(a, b); }
Index FieldSpec::pow(Index a, std::uint64_t e) const noexcept { return data_->pow(a, e); }

Index FieldSpec::inv(Index a) const
{
    if (a == 0)
        raise(ErrorCode::DivisionByZero, "inverse of zero");
    return data_->pow(a, data_->q - 2);
}

Index FieldSpec::generator_index() const noexcept { return data_->gen; }

Index FieldSpec::power_index(std::int64_t k) const noexcept
{
    const auto group = static_cast<std::int64_t>(data_->q - 1);
    std::int64_t r = k % group;
    if (r < 0)
        r += group;
    return data_->pow(data_->gen, static_cast<std::uint64_t>(r));
}

Index FieldSpec::integer_index(std::int64_t v) const noexcept
{
    const auto p = static_cast<std::int64_t>(data_->p);
    std::int64_t r = v % p;
    if (r < 0)
        r += p;
    return static_cast<Index>(r);
}

std::uint64_t FieldSpec::dlog(Index a, std::uint64_t limit) const
{
    if (a == 0)
        raise(ErrorCode::DivisionByZero, "discrete log of zero");
    if (data_->q > limit)
        raise(ErrorCode::FieldTooLarge, "field order exceeds the dlog table limit");
    std::call_once(data_->log_once, [this] { data_->build_log_table(); });
    return data_->log_table[a];
}

std::vector<std::uint32_t> FieldSpec::coords(Index a) const
{
    Poly c{};
    data_->unpack(a, c);
    return {c.begin(), c.begin() + data_->t};
}

bool operator==(const FieldSpec& a, const FieldSpec& b) noexcept
{
    if (a.data_ == b.data_)
        return true;
    return a.data_->p == b.data_->p && a.data_->t == b.data_->t && a.data_->modulus == b.data_->modulus;
}

std::string FieldSpec::describe() const
{
    std::ostringstream os;
    os << "F_" << data_->p;
    if (data_->t > 1)
        os << "^" << data_->t;
    return os.str();
}

FieldElement::FieldElement(FieldSpec field, Index index) : field_(std::move(field)), index_(index)
{
    if (index_ >= field_.order())
        raise(ErrorCode::InvalidArgument, "element index out of range for " + field_.describe());
}

namespace {

void require_same(const FieldSpec& a, const FieldSpec& b)
{
    if (!(a == b))
        raise(ErrorCode::FieldMismatch, a.describe() + " vs " + b.describe());
}

} // namespace

FieldElement FieldElement::operator-() const { return FieldElement(field_, field_.neg(index_)); }

FieldElement& FieldElement::operator+=(const FieldElement& o)
{
    require_same(field_, o.field_);
    index_ = field_.add(index_, o.index_);
    return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o)
{
    require_same(field_, o.field_);
    index_ = field_.sub(index_, o.index_);
    return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& o)
{
    require_same(field_, o.field_);
    index_ = field_.mul(index_, o.index_);
    return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& o)
{
    require_same(field_, o.field_);
    index_ = field_.mul(index_, field_.inv(o.index_));
    return *this;
}

FieldSpec make_prime_field(std::uint64_t p) { return FieldSpec::prime(p); }
FieldSpec make_extension_field(std::uint64_t p, unsigned t) { return FieldSpec::extension(p, t); }

FieldElement add(const FieldElement& a, const FieldElement& b) { return a + b; }
FieldElement sub(const FieldElement& a, const FieldElement& b) { return a - b; }
FieldElement neg(const FieldElement& a) { return -a; }
FieldElement mul(const FieldElement& a, const FieldElement& b) { return a * b; }

FieldElement inv(const FieldElement& a) { return FieldElement(a.field(), a.field().inv(a.index())); }

FieldElement pow(const FieldElement& a, std::uint64_t e) { return FieldElement(a.field(), a.field().pow(a.index(), e)); }

FieldElement embed(const FieldElement& a, const FieldSpec& target)
{
    const FieldSpec& src = a.field();
    if (src.characteristic() != target.characteristic())
        raise(ErrorCode::CharacteristicMismatch,
              "cannot embed " + src.describe() + " into " + target.describe());
    if (src == target)
        return a;
    if (!src.is_prime_field())
        raise(ErrorCode::FieldMismatch, "only prime-field elements can be embedded");
    // Constant polynomials have index equal to their value.
    return FieldElement(target, a.index());
}

std::uint64_t dlog(const FieldElement& a, std::uint64_t limit) { return a.field().dlog(a.index(), limit); }

FieldElement from_power(const FieldSpec& spec, std::int64_t k) { return spec.from_power(k); }

std::string format_element(const FieldElement& a, std::uint64_t dlog_limit)
{
    const FieldSpec& f = a.field();
    if (f.is_prime_field())
        return std::to_string(a.index());
    if (a.index() == 0)
        return "0";
    if (a.index() == 1)
        return "1";
    if (f.order() <= dlog_limit)
        return "w^" + std::to_string(f.dlog(a.index(), dlog_limit));
    std::string out = "[";
    const auto c = a.coords();
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i > 0)
            out += ',';
        out += std::to_string(c[i]);
    }
    return out + "]";
}

namespace {

std::uint64_t parse_decimal(std::string_view s, std::string_view token)
{
    std::uint64_t v = 0;
    const auto* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, v);
    if (s.empty() || ec != std::errc() || ptr != end)
        raise(ErrorCode::ParseError, "bad element token '" + std::string(token) + "'");
    return v;
}

} // namespace

FieldElement parse_element(const FieldSpec& spec, std::string_view token)
{
    if (token.empty())
        raise(ErrorCode::ParseError, "empty element token");
    if (token.front() == '[') {
        if (token.back() != ']')
            raise(ErrorCode::ParseError, "unterminated coefficient token '" + std::string(token) + "'");
        std::vector<std::uint32_t> coords;
        std::string_view body = token.substr(1, token.size() - 2);
        for (;;) {
            const auto comma = body.find(',');
            const std::uint64_t c = parse_decimal(body.substr(0, comma), token);
            if (c >= spec.characteristic())
                raise(ErrorCode::ParseError, "coefficient out of range in '" + std::string(token) + "'");
            coords.push_back(static_cast<std::uint32_t>(c));
            if (comma == std::string_view::npos)
                break;
            body.remove_prefix(comma + 1);
        }
        if (coords.size() != spec.degree())
            raise(ErrorCode::ParseError, "wrong coordinate count in '" + std::string(token) + "'");
        return spec.from_coords(coords);
    }
    if (spec.is_prime_field()) {
        const std::uint64_t v = parse_decimal(token, token);
        if (v >= spec.characteristic())
            raise(ErrorCode::ParseError, "element '" + std::string(token) + "' out of range");
        return spec.element(static_cast<Index>(v));
    }
    if (token == "0")
        return spec.zero();
    if (token == "1")
        return spec.one();
    if (token.size() > 2 && token.substr(0, 2) == "w^") {
        const std::uint64_t k = parse_decimal(token.substr(2), token);
        return spec.from_power(static_cast<std::int64_t>(k % (spec.order() - 1)));
    }
    raise(ErrorCode::ParseError, "bad element token '" + std::string(token) + "' for " + spec.describe());
}

} // namespace mdslift
