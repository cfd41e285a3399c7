// SPDX-License-Identifier: Apache-2.0

#include "cli.hpp"

#include "mdslift/mdslift.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

namespace mdslift::cli {

namespace {

struct Options {
    std::uint64_t p = 0;
    unsigned t = 1;
    std::uint64_t n = 0;
    std::uint64_t k = 0;
    std::uint64_t seed = 0;
    std::uint64_t max_enum = kDefaultEnumerationLimit;
    std::uint64_t max_dlog = kDefaultDlogLimit;
    bool strict = true;
    bool systematic = false;
    std::string out_path;
    std::string code_path;
    std::string second_path;
    std::string word_file;
    std::vector<std::string> tokens;
};

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        raise(ErrorCode::InvalidArgument, "cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void emit(const std::string& payload, const std::string& command, const Options& opt, std::ostream& out)
{
    const std::string text = payload + "# generated-by mdslift " + command + "\n";
    if (opt.out_path.empty() || opt.out_path == "-") {
        out << text;
        return;
    }
    std::ofstream file(opt.out_path, std::ios::binary | std::ios::trunc);
    if (!file)
        raise(ErrorCode::InvalidArgument, "cannot write '" + opt.out_path + "'");
    file << text;
}

FieldSpec make_field(const Options& opt)
{
    return opt.t == 1 ? make_prime_field(opt.p) : make_extension_field(opt.p, opt.t);
}

std::string join_tokens(const std::vector<std::string>& tokens)
{
    std::string out;
    for (const auto& tok : tokens) {
        if (!out.empty())
            out += ' ';
        out += tok;
    }
    return out;
}

int cmd_field(const Options& opt, std::ostream& out)
{
    const FieldSpec f = make_field(opt);
    out << "field " << f.describe() << '\n';
    out << "p=" << f.characteristic() << '\n';
    out << "t=" << f.degree() << '\n';
    out << "order=" << f.order() << '\n';
    out << "group_order=" << f.order() - 1 << '\n';
    if (!f.is_prime_field()) {
        const std::string line = format_field_line(f);
        out << line.substr(line.find("modulus=")) << '\n';
        out << "generator=w coords=" << format_element(f.generator(), 0) << '\n';
    } else {
        out << "generator=" << format_element(f.generator(), opt.max_dlog) << '\n';
    }
    return kExitOk;
}

int cmd_grs(const Options& opt, std::ostream& out)
{
    const FieldSpec f = make_field(opt);
    const LinearCode code = grs_default(f, opt.n, opt.k);
    emit(format_code(code, opt.max_dlog), "grs", opt, out);
    return kExitOk;
}

int cmd_example1(const Options& opt, std::ostream& out)
{
    emit(format_code(example1_code(), opt.max_dlog), "example1", opt, out);
    return kExitOk;
}

int cmd_mindist(const Options& opt, std::ostream& out)
{
    const LinearCode code = parse_code(read_file(opt.code_path));
    out << min_distance(code, opt.max_enum) << '\n';
    return kExitOk;
}

int cmd_ismds(const Options& opt, std::ostream& out)
{
    const LinearCode code = parse_code(read_file(opt.code_path));
    const auto bad = find_singular_minor(code.generator());
    if (!bad) {
        out << "MDS\n";
        return kExitOk;
    }
    out << "not MDS: singular columns";
    for (std::size_t c : *bad)
        out << ' ' << c;
    out << '\n';
    return kExitVerdictFalse;
}

int cmd_dh(const Options& opt, std::ostream& out)
{
    const FieldSpec f = make_field(opt);
    if (f.order() <= opt.n)
        raise(ErrorCode::FieldTooSmall, "need p^t > n");
    emit(format_dh(sample_dh(f, opt.n, opt.seed), opt.max_dlog), "dh", opt, out);
    return kExitOk;
}

int cmd_lift(const Options& opt, std::ostream& out)
{
    const LinearCode base = parse_code(read_file(opt.code_path));
    const DhDiagonal diag = parse_dh(read_file(opt.second_path));
    const LinearCode lifted = lift(base, diag, {.strict_dh = opt.strict, .systematize = opt.systematic});
    emit(format_code(lifted, opt.max_dlog), "lift", opt, out);
    return kExitOk;
}

int cmd_verify(const Options& opt, std::ostream& out)
{
    const LinearCode base = parse_code(read_file(opt.code_path));
    const LinearCode lifted = parse_code(read_file(opt.second_path));
    const LiftReport r = verify_lift(base, lifted, opt.max_enum);
    out << "base [" << r.base_n << "," << r.base_k << "] over " << base.field().describe()
        << (r.base_mds ? " MDS" : " not MDS") << '\n';
    out << "lifted [" << r.lifted_n << "," << r.lifted_k << "] over " << lifted.field().describe()
        << (r.lifted_mds ? " MDS" : " not MDS") << '\n';
    if (r.distance_checked)
        out << "distance " << *r.base_distance << " -> " << *r.lifted_distance << '\n';
    else
        out << "distance not enumerated\n";
    for (const auto& f : r.failures)
        out << "failure: " << f << '\n';
    out << (r.passed ? "PASS" : "FAIL") << '\n';
    return r.passed ? kExitOk : kExitVerdictFalse;
}

int cmd_diversity(const Options& opt, std::ostream& out)
{
    out << diversity_count(opt.p, opt.t, opt.n) << '\n';
    return kExitOk;
}

int cmd_encode(const Options& opt, std::ostream& out)
{
    const LinearCode code = parse_code(read_file(opt.code_path));
    std::vector<FieldElement> message;
    for (const auto& tok : opt.tokens)
        message.push_back(parse_element(code.field(), tok));
    out << format_word(std::span<const FieldElement>(erasure_encode(code, message)), opt.max_dlog);
    return kExitOk;
}

int cmd_decode(const Options& opt, std::ostream& out)
{
    const LinearCode code = parse_code(read_file(opt.code_path));
    const std::string text = opt.word_file.empty() ? join_tokens(opt.tokens) : read_file(opt.word_file);
    const ErasureWord word(code, parse_word(code.field(), text));
    out << format_word(std::span<const FieldElement>(erasure_decode(word)), opt.max_dlog);
    return kExitOk;
}

int exit_code_for(ErrorCode code)
{
    switch (code) {
    case ErrorCode::TooManyErasures:
    case ErrorCode::Inconsistent:
    case ErrorCode::Singular:
        return kExitVerdictFalse;
    default:
        return kExitUsage;
    }
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Lifted MDS codes over finite fields"};
    app.name("mdslift");
    app.require_subcommand(1);

    Options opt;
    std::function<int(const Options&, std::ostream&)> action;

    auto field_flags = [&opt](CLI::App* sub) {
        sub->add_option("-p,--prime", opt.p, "Field characteristic")->required();
        sub->add_option("-t,--degree", opt.t, "Extension degree")->check(CLI::Range(1u, 32u));
    };
    auto output_flag = [&opt](CLI::App* sub) {
        sub->add_option("-o,--out", opt.out_path, "Output file (default: stdout)");
    };

    auto* field = app.add_subcommand("field", "Describe F_p or F_{p^t}");
    field_flags(field);
    field->callback([&] { action = cmd_field; });

    auto* grs = app.add_subcommand("grs", "Generalized Reed-Solomon code with default evaluation points");
    field_flags(grs);
    grs->add_option("-n,--length", opt.n, "Code length")->required();
    grs->add_option("-k,--dimension", opt.k, "Code dimension")->required();
    output_flag(grs);
    grs->callback([&] { action = cmd_grs; });

    auto* example1 = app.add_subcommand("example1", "Emit the [8,3,6] code over F_7");
    output_flag(example1);
    example1->callback([&] { action = cmd_example1; });

    auto* mindist = app.add_subcommand("mindist", "Minimum distance by exhaustive enumeration");
    mindist->add_option("code", opt.code_path, "Code file")->required();
    mindist->add_option("--max-enum", opt.max_enum, "Codeword enumeration limit")->check(CLI::PositiveNumber);
    mindist->callback([&] { action = cmd_mindist; });

    auto* ismds = app.add_subcommand("ismds", "Check every k-column minor; exit 0 iff MDS");
    ismds->add_option("code", opt.code_path, "Code file")->required();
    ismds->callback([&] { action = cmd_ismds; });

    auto* dh = app.add_subcommand("dh", "Sample a distance holder diagonal");
    field_flags(dh);
    dh->add_option("-n,--length", opt.n, "Diagonal length")->required();
    dh->add_option("--seed", opt.seed, "64-bit sampling seed");
    output_flag(dh);
    dh->callback([&] { action = cmd_dh; });

    auto* lift_cmd = app.add_subcommand("lift", "Lift a code with a diagonal");
    lift_cmd->add_option("code", opt.code_path, "Base code file")->required();
    lift_cmd->add_option("diagonal", opt.second_path, "Diagonal file")->required();
    lift_cmd->add_flag("--strict,!--no-strict", opt.strict, "Require a dh diagonal (default on)");
    lift_cmd->add_flag("--systematic", opt.systematic, "Reduce the lifted generator to [I_k | A]");
    output_flag(lift_cmd);
    lift_cmd->callback([&] { action = cmd_lift; });

    auto* verify = app.add_subcommand("verify", "Compare a base code with its lift");
    verify->add_option("base", opt.code_path, "Base code file")->required();
    verify->add_option("lifted", opt.second_path, "Lifted code file")->required();
    verify->add_option("--max-enum", opt.max_enum, "Codeword enumeration limit")->check(CLI::PositiveNumber);
    verify->callback([&] { action = cmd_verify; });

    auto* diversity = app.add_subcommand("diversity", "Number of dh generator choices, binomial(p^t-1, n)");
    field_flags(diversity);
    diversity->add_option("-n,--length", opt.n, "Code length")->required();
    diversity->callback([&] { action = cmd_diversity; });

    auto* encode = app.add_subcommand("encode", "Systematic encoding of a message");
    encode->add_option("code", opt.code_path, "Code file")->required();
    encode->add_option("message", opt.tokens, "k element tokens")->required();
    encode->callback([&] { action = cmd_encode; });

    auto* decode = app.add_subcommand("decode", "Recover a message from a word with '?' erasures");
    decode->add_option("code", opt.code_path, "Code file")->required();
    decode->add_option("word", opt.tokens, "n tokens, '?' for erased");
    decode->add_option("--word-file", opt.word_file, "Read the word from a file");
    decode->callback([&] { action = cmd_decode; });

    for (auto* sub : {field, grs, example1, dh, lift_cmd, encode, decode})
        sub->add_option("--max-dlog", opt.max_dlog, "Largest field order printed as w^k")->check(CLI::PositiveNumber);

    std::vector<const char*> argv;
    argv.push_back("mdslift");
    for (const auto& a : args)
        argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        return action(opt, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

} // namespace mdslift::cli
