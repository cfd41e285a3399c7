// SPDX-License-Identifier: Apache-2.0

#include "cli.hpp"

#include "mdslift/mdslift.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace mdslift;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void spit(const std::filesystem::path& path, const std::string& text)
{
    std::ofstream(path, std::ios::binary) << text;
}

std::filesystem::path scratch(const std::string& name)
{
    const auto dir = std::filesystem::current_path() / "cli_scratch";
    std::filesystem::create_directories(dir);
    return dir / name;
}

} // namespace

TEST_CASE("field")
{
    const Result f7 = run({"field", "-p", "7"});
    CHECK(f7.code == 0);
    CHECK(f7.out.find("generator=3\n") != std::string::npos);
    CHECK(f7.out.find("order=7\n") != std::string::npos);

    const Result f343 = run({"field", "-p", "7", "-t", "3"});
    CHECK(f343.code == 0);
    CHECK(f343.out.find("modulus=2,1,1,1\n") != std::string::npos);
    CHECK(f343.out.find("group_order=342\n") != std::string::npos);

    const Result bad = run({"field", "-p", "9"});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("NotPrime") != std::string::npos);
    CHECK(run({"field", "-p", "7", "-t", "1"}).code == 0);
    CHECK(run({"field"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"nonsense"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("grs, mindist and ismds")
{
    const auto path = scratch("grs73.txt");
    const Result made = run({"grs", "-p", "7", "-n", "7", "-k", "3", "-o", path.string()});
    REQUIRE(made.code == 0);
    const std::string text = slurp(path);
    CHECK(text.ends_with("# generated-by mdslift grs\n"));
    const LinearCode code = parse_code(text);
    CHECK(oracle::brute_min_distance(code) == 5);

    CHECK(run({"mindist", path.string()}).out == "5\n");
    CHECK(run({"ismds", path.string()}).out == "MDS\n");
    CHECK(run({"mindist", path.string(), "--max-enum", "10"}).code == 2);

    const Result too_long = run({"grs", "-p", "7", "-n", "8", "-k", "3"});
    CHECK(too_long.code == 2);
    CHECK(too_long.err.find("TooLong") != std::string::npos);

    const auto big = scratch("grs343.txt");
    REQUIRE(run({"grs", "-p", "7", "-t", "3", "-n", "8", "-k", "3", "-o", big.string()}).code == 0);
    CHECK(run({"ismds", big.string()}).code == 0);

    CHECK(run({"mindist", scratch("missing.txt").string()}).code == 2);
}

TEST_CASE("example1")
{
    const Result r = run({"example1"});
    CHECK(r.code == 0);
    CHECK(parse_code(r.out).generator() == example1_code().generator());

    const auto path = scratch("example1.txt");
    REQUIRE(run({"example1", "-o", path.string()}).code == 0);
    CHECK(slurp(path) == r.out);
    CHECK(run({"mindist", path.string()}).out == "6\n");
    CHECK(run({"ismds", path.string()}).code == 0);

    FieldMatrix g = example1_code().generator();
    for (std::size_t i = 0; i < 3; ++i)
        g.raw(i, 6) = 0;
    const auto zero_col = scratch("zero_column.txt");
    spit(zero_col, format_code(LinearCode(g)));
    const Result not_mds = run({"ismds", zero_col.string()});
    CHECK(not_mds.code == 1);
    CHECK(not_mds.out.starts_with("not MDS: singular columns"));
}

TEST_CASE("dh")
{
    const Result a = run({"dh", "-p", "7", "-t", "3", "-n", "8", "--seed", "0"});
    const Result b = run({"dh", "-p", "7", "-t", "3", "-n", "8", "--seed", "0"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(parse_dh(a.out).entries() == sample_dh(make_extension_field(7, 3), 8, 0).entries());
    CHECK(a.out.find("# dh l=1\n") != std::string::npos);
    CHECK(run({"dh", "-p", "7", "-t", "3", "-n", "8", "--seed", "1"}).out != a.out);

    const Result small = run({"dh", "-p", "2", "-t", "2", "-n", "4"});
    CHECK(small.code == 2);
    CHECK(small.err.find("FieldTooSmall") != std::string::npos);
    CHECK(run({"dh", "-p", "2", "-t", "2", "-n", "3"}).code == 0);
}

TEST_CASE("lift and verify")
{
    const auto base = scratch("lift_base.txt");
    const auto diag = scratch("lift_diag.txt");
    const auto lifted = scratch("lifted.txt");
    const auto sys = scratch("lifted_sys.txt");
    REQUIRE(run({"example1", "-o", base.string()}).code == 0);
    REQUIRE(run({"dh", "-p", "7", "-t", "3", "-n", "8", "--seed", "3", "-o", diag.string()}).code == 0);
    REQUIRE(run({"lift", base.string(), diag.string(), "-o", lifted.string()}).code == 0);
    CHECK(run({"ismds", lifted.string()}).out == "MDS\n");
    CHECK(parse_code(slurp(lifted)).generator() ==
          lift(example1_code(), sample_dh(make_extension_field(7, 3), 8, 3)).generator());

    REQUIRE(run({"lift", base.string(), diag.string(), "--systematic", "-o", sys.string()}).code == 0);
    const LinearCode s = parse_code(slurp(sys));
    CHECK(is_systematic(s.generator()));

    const Result v = run({"verify", base.string(), lifted.string()});
    CHECK(v.code == 0);
    CHECK(v.out.find("distance 6 -> 6\n") != std::string::npos);
    CHECK(v.out.ends_with("PASS\n"));

    FieldMatrix broken = parse_code(slurp(lifted)).generator();
    for (std::size_t i = 0; i < 3; ++i)
        broken.raw(i, 2) = 0;
    const auto bad = scratch("lifted_broken.txt");
    spit(bad, format_code(LinearCode(broken)));
    const Result fail = run({"verify", base.string(), bad.string(), "--max-enum", "1000"});
    CHECK(fail.code == 1);
    CHECK(fail.out.ends_with("FAIL\n"));

    const FieldSpec f343 = make_extension_field(7, 3);
    const auto repeated = scratch("repeated_diag.txt");
    spit(repeated, format_dh(DhDiagonal(std::vector<FieldElement>(8, f343.generator()))));
    const Result strict = run({"lift", base.string(), repeated.string(), "--strict"});
    CHECK(strict.code == 2);
    CHECK(strict.err.find("NotDh") != std::string::npos);
    CHECK(run({"lift", base.string(), repeated.string()}).code == 2);
    CHECK(run({"lift", base.string(), repeated.string(), "--no-strict"}).code == 0);
}

TEST_CASE("diversity")
{
    CHECK(run({"diversity", "-p", "2", "-t", "2", "-n", "3"}).out == "1\n");
    CHECK(run({"diversity", "-p", "7", "-t", "3", "-n", "8"}).out ==
          oracle::binomial_multiplicative(342, 8).str() + "\n");
    CHECK(run({"diversity", "-p", "2", "-n", "5"}).code == 2);
}

TEST_CASE("encode and decode")
{
    const auto base = scratch("erasure_base.txt");
    const auto diag = scratch("erasure_diag.txt");
    const auto lifted = scratch("erasure_lifted.txt");
    REQUIRE(run({"example1", "-o", base.string()}).code == 0);
    REQUIRE(run({"dh", "-p", "7", "-t", "3", "-n", "8", "--seed", "9", "-o", diag.string()}).code == 0);
    REQUIRE(run({"lift", base.string(), diag.string(), "-o", lifted.string()}).code == 0);

    CHECK(run({"encode", base.string(), "0", "0", "0"}).out == "0 0 0 0 0 0 0 0\n");

    const Result enc = run({"encode", lifted.string(), "w^5", "1", "w^100"});
    REQUIRE(enc.code == 0);
    std::istringstream tokens(enc.out);
    std::vector<std::string> word{"decode", lifted.string()};
    std::string tok;
    for (int i = 0; tokens >> tok; ++i)
        word.push_back(i == 0 || i == 2 || i == 3 || i == 5 || i == 7 ? "?" : tok);
    const Result dec = run(word);
    CHECK(dec.code == 0);
    CHECK(dec.out == "w^5 1 w^100\n");

    const auto word_file = scratch("word.txt");
    spit(word_file, "# received\n? ? ? " + enc.out.substr(enc.out.find(' ', enc.out.find(' ', enc.out.find(' ') + 1) + 1) + 1));
    const Result from_file = run({"decode", lifted.string(), "--word-file", word_file.string()});
    CHECK(from_file.code == 0);
    CHECK(from_file.out == "w^5 1 w^100\n");

    const Result too_many = run({"decode", base.string(), "?", "?", "?", "?", "?", "?", "1", "2"});
    CHECK(too_many.code == 1);
    CHECK(too_many.err.find("TooManyErasures") != std::string::npos);
    CHECK(run({"encode", base.string(), "1", "2"}).code == 2);
}
