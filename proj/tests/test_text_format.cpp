// SPDX-License-Identifier: Apache-2.0

#include "mdslift/error.hpp"
#include "mdslift/text_format.hpp"
#include "oracles.hpp"

#include <doctest.h>

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

constexpr std::string_view kExampleText = "mdslift-matrix v1\n"
                                          "field p=7 t=1\n"
                                          "rows=3 cols=8\n"
                                          "1 0 0 6 4 2 5 3\n"
                                          "0 1 0 3 1 5 1 3\n"
                                          "0 0 1 3 5 2 4 6\n"
                                          "params n=8 k=3 d=?\n";

} // namespace

TEST_CASE("field line")
{
    CHECK(format_field_line(make_prime_field(7)) == "field p=7 t=1");
    CHECK(format_field_line(make_extension_field(7, 3)) == "field p=7 t=3 modulus=2,1,1,1");
    CHECK(format_field_line(make_extension_field(2, 4)) == "field p=2 t=4 modulus=1,0,0,1,1");
}

TEST_CASE("example code text")
{
    CHECK(format_code(example1_code()) == kExampleText);
    const LinearCode parsed = parse_code(kExampleText);
    CHECK(parsed.generator() == example1_code().generator());
    CHECK_FALSE(parsed.known_distance().has_value());

    const LinearCode with_d = parse_code(std::string(kExampleText).replace(kExampleText.find("d=?"), 3, "d=6"));
    CHECK(with_d.known_distance() == 6u);
    CHECK(min_distance(with_d) == 6);

    // A wrong claim below the Singleton bound is caught when the distance is computed.
    const LinearCode wrong = parse_code(std::string(kExampleText).replace(kExampleText.find("d=?"), 3, "d=4"));
    CHECK(code_of([&] { min_distance(wrong); }) == ErrorCode::Inconsistent);
    CHECK(code_of([&] { parse_code(std::string(kExampleText).replace(kExampleText.find("d=?"), 3, "d=7")); }) ==
          ErrorCode::InvalidArgument);

    min_distance(parsed);
    CHECK(format_code(parsed).find("params n=8 k=3 d=6") != std::string::npos);
}

TEST_CASE("comments and blank lines are ignored")
{
    const std::string text = "# leading comment\n\n"
                             "mdslift-matrix v1   # header\n"
                             "field p=7 t=1\n"
                             "\n"
                             "rows=3 cols=8\n"
                             "1 0 0 6 4 2 5 3 # row\n"
                             "0 1 0 3 1 5 1 3\n"
                             "   0 0 1 3 5 2 4 6   \n"
                             "# generated-by mdslift example1\n";
    CHECK(parse_code(text).generator() == example1_code().generator());
    CHECK(parse_matrix(text) == example1_code().generator());
    CHECK(strip_comments("a # b\n\n# c\nd\n") == "a\nd\n");
}

TEST_CASE("matrix, code and diagonal round trips")
{
    std::mt19937_64 rng(51);
    for (const FieldSpec& f : {make_prime_field(2), make_prime_field(7), make_prime_field(65537),
                               make_extension_field(2, 4), make_extension_field(7, 3), make_extension_field(3, 13)}) {
        CAPTURE(f.describe());
        for (int i = 0; i < 20; ++i) {
            const FieldMatrix m = oracle::random_matrix(f, 1 + rng() % 4, 1 + rng() % 6, rng);
            CHECK(parse_matrix(format_matrix(m)) == m);
            CHECK(parse_matrix(format_matrix(m, 0)) == m);
            if (rank(m) == m.rows()) {
                const LinearCode c(m);
                const LinearCode back = parse_code(format_code(c));
                CHECK(back.generator() == m);
                CHECK(back.field() == f);
            }
        }
        if (f.order() > 8) {
            const DhDiagonal d = sample_dh(f, 8, rng());
            const std::string text = format_dh(d);
            CHECK(text.find("# dh l=1\n") != std::string::npos);
            CHECK(parse_dh(text).entries() == d.entries());
        }
    }
    const FieldSpec f4 = make_extension_field(2, 2);
    const DhDiagonal repeated({f4.one(), f4.one(), f4.generator()});
    CHECK(format_dh(repeated).find("# dh l=2") != std::string::npos);
    CHECK(parse_dh(format_dh(repeated)).l_value() == 2);
}

TEST_CASE("non-default modulus survives a round trip")
{
    const FieldSpec f = FieldSpec::with_modulus(7, {1, 0, 1});
    std::mt19937_64 rng(52);
    const FieldMatrix m = oracle::random_matrix(f, 2, 5, rng);
    const FieldMatrix back = parse_matrix(format_matrix(m));
    CHECK(back.field() == f);
    CHECK(back == m);
}

TEST_CASE("field line without modulus uses the default extension")
{
    const FieldMatrix m = parse_matrix("mdslift-matrix v1\nfield p=7 t=3\nrows=1 cols=2\nw^5 [1,2,3]\n");
    CHECK(m.field() == make_extension_field(7, 3));
    CHECK(m.at(0, 0) == from_power(m.field(), 5));
}

TEST_CASE("words")
{
    const FieldSpec f343 = make_extension_field(7, 3);
    std::vector<Symbol> word{from_power(f343, 3), std::nullopt, f343.zero(), f343.one(), std::nullopt};
    const std::string text = format_word(word);
    CHECK(text == "w^3 ? 0 1 ?\n");
    CHECK(parse_word(f343, text) == word);
    CHECK(parse_word(f343, "# received\n w^3 ?  0 1 ? \n") == word);

    const FieldSpec f7 = make_prime_field(7);
    const std::vector<FieldElement> plain{f7.element(6), f7.element(0)};
    CHECK(format_word(std::span<const FieldElement>(plain)) == "6 0\n");
    CHECK(code_of([&] { parse_word(f7, "1 2\n3 4\n"); }) == ErrorCode::ParseError);
    CHECK(code_of([&] { parse_word(f7, "1 9"); }) == ErrorCode::ParseError);
}

TEST_CASE("malformed input")
{
    const std::vector<std::string> bad{
        "",
        "mdslift-matrix v2\nfield p=7 t=1\nrows=1 cols=1\n1\n",
        "mdslift-matrix v1\nfield p=7\nrows=1 cols=1\n1\n",
        "mdslift-matrix v1\nfield p=7 t=1 modulus=1,1\nrows=1 cols=1\n1\n",
        "mdslift-matrix v1\nfield p=7 t=3 modulus=2,1,1\nrows=1 cols=1\n1\n",
        "mdslift-matrix v1\nfield p=7 t=3 modulus=9,1,1,1\nrows=1 cols=1\n1\n",
        "mdslift-matrix v1\nfield p=7 t=1\nrows=0 cols=1\n",
        "mdslift-matrix v1\nfield p=7 t=1\nrows=2 cols=2\n1 2\n",
        "mdslift-matrix v1\nfield p=7 t=1\nrows=1 cols=2\n1 2 3\n",
        "mdslift-matrix v1\nfield p=7 t=1\nrows=1 cols=2\n1 x\n",
        "mdslift-matrix v1\nfield p=7 t=1\nrows=one cols=2\n1 2\n",
        "mdslift-matrix v1\nfield p=7 t=1\nrows=1 cols=2\n1 2\nextra\n",
    };
    for (const auto& text : bad) {
        CAPTURE(text);
        CHECK(code_of([&] { parse_matrix(text); }) == ErrorCode::ParseError);
    }
    CHECK(code_of([] { parse_matrix("mdslift-matrix v1\nfield p=9 t=1\nrows=1 cols=1\n1\n"); }) == ErrorCode::NotPrime);
    CHECK(code_of([] { parse_matrix("mdslift-matrix v1\nfield p=7 t=2 modulus=6,0,1\nrows=1 cols=1\n1\n"); }) ==
          ErrorCode::NotIrreducible);

    const std::string code_text(kExampleText);
    CHECK(code_of([&] { parse_code(code_text.substr(0, code_text.find("params")) + "params n=7 k=3 d=?\n"); }) ==
          ErrorCode::ParseError);
    CHECK(code_of([&] { parse_code(code_text + "params n=8 k=3 d=?\n"); }) == ErrorCode::ParseError);
    CHECK(code_of([&] { parse_code(code_text.substr(0, code_text.find("params")) + "params n=8 k=3\n"); }) ==
          ErrorCode::ParseError);
    CHECK(code_of([&] { parse_dh(code_text); }) == ErrorCode::ParseError);
    CHECK(code_of([] { parse_dh("mdslift-matrix v1\nfield p=7 t=1\nrows=1 cols=3\n1 0 2\n"); }) ==
          ErrorCode::ZeroDiagonalEntry);
}
