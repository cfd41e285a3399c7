// SPDX-License-Identifier: Apache-2.0

#include "mdslift/codes.hpp"
#include "mdslift/error.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <thread>

using namespace mdslift;

namespace {

ErrorCode code_of(auto&& fn)
{
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an mdslift::Error");
    return ErrorCode::InvalidArgument;
}

std::vector<FieldElement> range_elements(const FieldSpec& f, Index first, Index count)
{
    std::vector<FieldElement> out;
    for (Index i = 0; i < count; ++i)
        out.push_back(f.element(first + i));
    return out;
}

} // namespace

TEST_CASE("LinearCode invariants")
{
    const FieldSpec f7 = make_prime_field(7);
    CHECK(code_of([&] { LinearCode(FieldMatrix::from_integers(f7, {{1, 2, 3}, {2, 4, 6}})); }) ==
          ErrorCode::RankDeficient);
    CHECK(code_of([&] { LinearCode(FieldMatrix::identity(f7, 3).transpose() * FieldMatrix(f7, 3, 2)); }) ==
          ErrorCode::RankDeficient);
    CHECK(code_of([&] { LinearCode(FieldMatrix::from_integers(f7, {{1, 1, 1}}), 4); }) == ErrorCode::InvalidArgument);

    const LinearCode rep(FieldMatrix::from_integers(f7, {{1, 1, 1}}), 3);
    CHECK(rep.known_distance() == 3u);
    rep.record_distance(3);
    CHECK(code_of([&] { rep.record_distance(2); }) == ErrorCode::Inconsistent);
    const LinearCode copy = rep;
    CHECK(copy.known_distance() == 3u);
}

TEST_CASE("distance cache is set once under concurrency")
{
    const LinearCode code = grs_default(make_prime_field(7), 6, 2);
    std::vector<std::thread> threads;
    std::vector<std::size_t> results(6);
    for (std::size_t i = 0; i < results.size(); ++i)
        threads.emplace_back([&, i] { results[i] = min_distance(code); });
    for (auto& t : threads)
        t.join();
    for (std::size_t d : results)
        CHECK(d == 5);
    CHECK(code.known_distance() == 5u);
}

TEST_CASE("GRS construction")
{
    const FieldSpec f7 = make_prime_field(7);
    const auto alphas = range_elements(f7, 0, 7);
    const std::vector<FieldElement> ones(7, f7.one());
    const LinearCode c = grs_generator(f7, alphas, ones, 3);
    CHECK(c.n() == 7);
    CHECK(c.k() == 3);
    CHECK(oracle::brute_min_distance(c) == 5);
    CHECK(min_distance(c) == 5);
    CHECK(is_mds(c));
    CHECK(c.generator() == FieldMatrix::from_integers(f7, {{1, 1, 1, 1, 1, 1, 1},
                                                           {0, 1, 2, 3, 4, 5, 6},
                                                           {0, 1, 4, 2, 2, 4, 1}}));

    const LinearCode full = grs_generator(f7, alphas, ones, 7);
    CHECK(min_distance(full) == 1);

    const auto nonzero = range_elements(f7, 1, 6);
    const LinearCode k1 = grs_generator(f7, nonzero, std::vector<FieldElement>(6, f7.one()), 1);
    CHECK(oracle::brute_min_distance(k1) == 6);
    CHECK(min_distance(k1) == 6);

    CHECK(code_of([&] { grs_default(f7, 8, 3); }) == ErrorCode::TooLong);
    auto dup = alphas;
    dup[4] = dup[2];
    CHECK(code_of([&] { grs_generator(f7, dup, ones, 3); }) == ErrorCode::DuplicateAlpha);
    auto zero_v = ones;
    zero_v[5] = f7.zero();
    CHECK(code_of([&] { grs_generator(f7, alphas, zero_v, 3); }) == ErrorCode::ZeroMultiplier);
    CHECK(code_of([&] { grs_generator(f7, alphas, ones, 0); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("GRS codes are always MDS")
{
    std::mt19937_64 rng(21);
    for (std::uint64_t p : {7u, 11u, 13u}) {
        const FieldSpec f = make_prime_field(p);
        for (int i = 0; i < 50; ++i) {
            const std::size_t n = 2 + rng() % (p - 1);
            const std::size_t k = 1 + rng() % n;
            CHECK(is_mds(oracle::random_grs(f, n, k, rng)));
        }
    }
    const FieldSpec f343 = make_extension_field(7, 3);
    CHECK(is_mds(grs_default(f343, 8, 3)));
}

TEST_CASE("example fixture")
{
    const LinearCode c = example1_code();
    const FieldSpec f7 = make_prime_field(7);
    CHECK(c.n() == 8);
    CHECK(c.k() == 3);
    CHECK(c.field() == f7);
    CHECK(c.generator() == FieldMatrix::from_integers(f7, {{1, 0, 0, 6, 4, 2, 5, 3},
                                                           {0, 1, 0, 3, 1, 5, 1, 3},
                                                           {0, 0, 1, 3, 5, 2, 4, 6}}));
    CHECK_FALSE(c.known_distance().has_value());
    CHECK(oracle::brute_min_distance(c) == 6);
    CHECK(min_distance(c) == 6);
    CHECK(c.known_distance() == 6u);
    CHECK(is_mds(c));
}

TEST_CASE("encode_message")
{
    const LinearCode c = example1_code();
    const FieldSpec& f = c.field();
    CHECK(hamming_weight(encode_message(c, std::vector<FieldElement>(3, f.zero()))) == 0);
    for (std::size_t i = 0; i < 3; ++i) {
        std::vector<FieldElement> e(3, f.zero());
        e[i] = f.one();
        CHECK(encode_message(c, e) == c.generator().row(i));
    }
    std::mt19937_64 rng(22);
    for (int i = 0; i < 20; ++i) {
        const std::vector<FieldElement> m{oracle::random_element(f, rng), oracle::random_element(f, rng),
                                          oracle::random_element(f, rng)};
        const auto word = encode_message(c, m);
        CHECK(std::vector<FieldElement>(word.begin(), word.begin() + 3) == m);
    }
    CHECK(code_of([&] { encode_message(c, std::vector<FieldElement>(2, f.zero())); }) == ErrorCode::DimensionMismatch);
}

TEST_CASE("min_distance")
{
    const FieldSpec f7 = make_prime_field(7);
    for (std::size_t n = 1; n <= 6; ++n) {
        const LinearCode rep(FieldMatrix(f7, 1, n, std::vector<Index>(n, 1)));
        CHECK(min_distance(rep) == n);
    }
    const LinearCode grs62 = grs_default(f7, 6, 2);
    CHECK(oracle::brute_min_distance(grs62) == 5);
    CHECK(min_distance(grs62) == 5);

    CHECK(code_of([&] { min_distance(example1_code(), 100); }) == ErrorCode::TooManyCodewords);
    CHECK(min_distance(example1_code(), 342) == 6);
    CHECK(code_of([&] { min_distance(example1_code(), 341); }) == ErrorCode::TooManyCodewords);
}

TEST_CASE("min_distance agrees with brute force on random codes")
{
    std::mt19937_64 rng(23);
    for (const FieldSpec& f : {make_prime_field(2), make_prime_field(3), make_prime_field(7),
                               make_extension_field(2, 3), make_extension_field(3, 2)}) {
        for (int i = 0; i < 15; ++i) {
            const std::size_t n = 2 + rng() % 6;
            const std::size_t k = 1 + rng() % std::min<std::size_t>(n, 3);
            const FieldMatrix g = oracle::random_matrix(f, k, n, rng);
            if (rank(g) < k)
                continue;
            const LinearCode code(g);
            const std::size_t d = min_distance(code);
            CHECK(d == oracle::brute_min_distance(code));
            CHECK(d == oracle::projective_min_distance(code));
            CHECK(d <= code.singleton_bound());
        }
    }
}

TEST_CASE("is_mds matches the Singleton equality")
{
    std::mt19937_64 rng(24);
    int mds = 0;
    int non_mds = 0;
    for (const FieldSpec& f : {make_prime_field(5), make_prime_field(7), make_extension_field(2, 3),
                               make_extension_field(3, 2), make_prime_field(13)}) {
        for (int i = 0; i < 40; ++i) {
            const std::size_t n = 2 + rng() % std::min<std::uint64_t>(7, f.order());
            const std::size_t k = 1 + rng() % std::min<std::size_t>(n, 3);
            const FieldMatrix g = oracle::random_matrix(f, k, n, rng);
            if (rank(g) < k)
                continue;
            const LinearCode code(g);
            const bool verdict = is_mds(code);
            CHECK(verdict == (oracle::brute_min_distance(code) == code.singleton_bound()));
            (verdict ? mds : non_mds)++;
        }
    }
    CHECK(mds > 10);
    CHECK(non_mds > 10);
}

TEST_CASE("is_mds negative cases")
{
    const FieldSpec f7 = make_prime_field(7);
    FieldMatrix g = example1_code().generator();
    for (std::size_t i = 0; i < 3; ++i)
        g.raw(i, 5) = 0;
    CHECK_FALSE(is_mds(LinearCode(g)));

    FieldMatrix twin = example1_code().generator();
    for (std::size_t i = 0; i < 3; ++i)
        twin.raw(i, 4) = twin.raw(i, 3);
    const auto bad = find_singular_minor(twin);
    REQUIRE(bad.has_value());
    CHECK(std::find(bad->begin(), bad->end(), 3) != bad->end());
    CHECK(std::find(bad->begin(), bad->end(), 4) != bad->end());
    CHECK_FALSE(find_singular_minor(example1_code().generator()).has_value());
}

TEST_CASE("row and column scaling")
{
    const LinearCode c = example1_code();
    const FieldMatrix& g = c.generator();
    const FieldSpec& f = c.field();
    CHECK(scale_row(g, 1, f.one()) == g);
    CHECK(scale_col(g, 4, f.one()) == g);

    std::mt19937_64 rng(25);
    for (std::size_t j = 0; j < 8; ++j) {
        const FieldElement s = oracle::random_nonzero(f, rng);
        CHECK(is_mds(scale_col(g, j, s)));
    }
    for (std::size_t i = 0; i < 3; ++i) {
        const FieldElement s = oracle::random_nonzero(f, rng);
        CHECK(scale_row(scale_row(g, i, s), i, inv(s)) == g);
        CHECK(scale_col(scale_col(g, i, s), i, inv(s)) == g);
        CHECK(is_mds(scale_row(g, i, s)));
    }
    CHECK(code_of([&] { scale_row(g, 0, f.zero()); }) == ErrorCode::ZeroScalar);
    CHECK(code_of([&] { scale_col(g, 0, f.zero()); }) == ErrorCode::ZeroScalar);
    CHECK(code_of([&] { scale_row(g, 3, f.one()); }) == ErrorCode::IndexOutOfRange);
    CHECK(code_of([&] { scale_col(g, 8, f.one()); }) == ErrorCode::IndexOutOfRange);
}

TEST_CASE("monomial sandwich")
{
    const LinearCode c = example1_code();
    const FieldMatrix& d = c.generator();
    const FieldSpec& f = c.field();
    CHECK(monomial_sandwich(d, std::vector<FieldElement>(3, f.one()), std::vector<FieldElement>(8, f.one())) == d);

    std::mt19937_64 rng(26);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<FieldElement> left, right;
        for (int i = 0; i < 3; ++i)
            left.push_back(oracle::random_nonzero(f, rng));
        for (int j = 0; j < 8; ++j)
            right.push_back(oracle::random_nonzero(f, rng));
        const FieldMatrix s = monomial_sandwich(d, left, right);
        CHECK(is_mds(s));
        CHECK(s == FieldMatrix::diagonal(left) * d * FieldMatrix::diagonal(right));
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 8; ++j)
                CHECK(s.at(i, j) == left[i] * d.at(i, j) * right[j]);
    }
    std::vector<FieldElement> with_zero(8, f.one());
    with_zero[2] = f.zero();
    CHECK(code_of([&] { monomial_sandwich(d, std::vector<FieldElement>(3, f.one()), with_zero); }) ==
          ErrorCode::ZeroDiagonalEntry);
    CHECK(code_of([&] { monomial_sandwich(d, std::vector<FieldElement>(2, f.one()), with_zero); }) ==
          ErrorCode::DimensionMismatch);
}

TEST_CASE("scaling and sandwiches preserve MDS on random GRS codes")
{
    std::mt19937_64 rng(27);
    int failures = 0;
    for (int code_index = 0; code_index < 50; ++code_index) {
        const FieldSpec f = make_prime_field(code_index % 2 ? 13 : 11);
        const std::size_t n = 3 + rng() % (f.order() - 3);
        const std::size_t k = 1 + rng() % (n - 1);
        const LinearCode code = oracle::random_grs(f, n, k, rng);
        for (int i = 0; i < 10; ++i) {
            const FieldElement s = oracle::random_nonzero(f, rng);
            const FieldMatrix scaled = rng() % 2 ? scale_row(code.generator(), rng() % k, s)
                                                 : scale_col(code.generator(), rng() % n, s);
            failures += !is_mds(scaled);
        }
    }
    CHECK(failures == 0);
}
