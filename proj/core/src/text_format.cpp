// SPDX-License-Identifier: Apache-2.0

#include "mdslift/text_format.hpp"

#include "mdslift/error.hpp"

#include <charconv>
#include <sstream>

namespace mdslift {

namespace {

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_ws(std::string_view s)
{
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t'))
            ++i;
        std::size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t')
            ++j;
        if (j > i)
            out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

// Payload lines: comments stripped, blank lines dropped.
std::vector<std::string_view> payload_lines(std::string_view text)
{
    std::vector<std::string_view> out;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        const auto hash = line.find('#');
        if (hash != std::string_view::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (!line.empty())
            out.push_back(line);
        if (nl == std::string_view::npos)
            break;
        text.remove_prefix(nl + 1);
    }
    return out;
}

std::uint64_t parse_uint(std::string_view s, std::string_view what)
{
    std::uint64_t v = 0;
    const auto* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, v);
    if (s.empty() || ec != std::errc() || ptr != end)
        raise(ErrorCode::ParseError, "bad " + std::string(what) + " value '" + std::string(s) + "'");
    return v;
}

std::string_view value_of(std::string_view kv, std::string_view key)
{
    if (kv.size() <= key.size() || kv.substr(0, key.size()) != key || kv[key.size()] != '=')
        raise(ErrorCode::ParseError, "expected " + std::string(key) + "=..., got '" + std::string(kv) + "'");
    return kv.substr(key.size() + 1);
}

FieldSpec parse_field_line(std::string_view line)
{
    const auto parts = split_ws(line);
    if ((parts.size() != 3 && parts.size() != 4) || parts[0] != "field")
        raise(ErrorCode::ParseError, "bad field line '" + std::string(line) + "'");
    const std::uint64_t p = parse_uint(value_of(parts[1], "p"), "p");
    const std::uint64_t t = parse_uint(value_of(parts[2], "t"), "t");
    if (t < 1 || t > 32)
        raise(ErrorCode::ParseError, "bad degree " + std::to_string(t));
    if (t == 1) {
        if (parts.size() == 4)
            raise(ErrorCode::ParseError, "prime field line carries a modulus");
        return FieldSpec::prime(p);
    }
    if (parts.size() == 3)
        return FieldSpec::extension(p, static_cast<unsigned>(t));
    std::vector<std::uint32_t> modulus;
    std::string_view body = value_of(parts[3], "modulus");
    for (;;) {
        const auto comma = body.find(',');
        const std::uint64_t c = parse_uint(body.substr(0, comma), "modulus");
        if (c >= p)
            raise(ErrorCode::ParseError, "modulus coefficient out of range");
        modulus.push_back(static_cast<std::uint32_t>(c));
        if (comma == std::string_view::npos)
            break;
        body.remove_prefix(comma + 1);
    }
    if (modulus.size() != t + 1)
        raise(ErrorCode::ParseError, "modulus must have t+1 coefficients");
    return FieldSpec::with_modulus(p, std::move(modulus));
}

struct ParsedMatrix {
    FieldMatrix matrix;
    std::vector<std::string_view> trailer;
};

ParsedMatrix parse_matrix_block(std::string_view text)
{
    const auto lines = payload_lines(text);
    if (lines.size() < 3 || lines[0] != kMatrixHeader)
        raise(ErrorCode::ParseError, "missing '" + std::string(kMatrixHeader) + "' header");
    const FieldSpec field = parse_field_line(lines[1]);
    const auto dims = split_ws(lines[2]);
    if (dims.size() != 2)
        raise(ErrorCode::ParseError, "bad dimension line '" + std::string(lines[2]) + "'");
    const std::uint64_t rows = parse_uint(value_of(dims[0], "rows"), "rows");
    const std::uint64_t cols = parse_uint(value_of(dims[1], "cols"), "cols");
    if (rows == 0 || cols == 0)
        raise(ErrorCode::ParseError, "matrix dimensions must be positive");
    if (lines.size() < 3 + rows)
        raise(ErrorCode::ParseError, "expected " + std::to_string(rows) + " matrix rows");

    FieldMatrix m(field, rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const auto tokens = split_ws(lines[3 + i]);
        if (tokens.size() != cols)
            raise(ErrorCode::ParseError, "row " + std::to_string(i) + " has " + std::to_string(tokens.size()) +
                                             " entries, expected " + std::to_string(cols));
        for (std::size_t j = 0; j < cols; ++j)
            m.set(i, j, parse_element(field, tokens[j]));
    }
    return {std::move(m), {lines.begin() + 3 + static_cast<std::ptrdiff_t>(rows), lines.end()}};
}

} // namespace

std::string format_field_line(const FieldSpec& field)
{
    std::string out = "field p=" + std::to_string(field.characteristic()) + " t=" + std::to_string(field.degree());
    if (!field.is_prime_field()) {
        out += " modulus=";
        const auto& mod = field.modulus();
        for (std::size_t i = 0; i < mod.size(); ++i) {
            if (i > 0)
                out += ',';
            out += std::to_string(mod[i]);
        }
    }
    return out;
}

std::string format_matrix(const FieldMatrix& m, std::uint64_t dlog_limit)
{
    std::ostringstream os;
    os << kMatrixHeader << '\n' << format_field_line(m.field()) << '\n';
    os << "rows=" << m.rows() << " cols=" << m.cols() << '\n';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j > 0)
                os << ' ';
            os << format_element(m.at(i, j), dlog_limit);
        }
        os << '\n';
    }
    return os.str();
}

FieldMatrix parse_matrix(std::string_view text)
{
    auto parsed = parse_matrix_block(text);
    for (std::string_view extra : parsed.trailer) {
        if (extra.substr(0, 7) != "params ")
            raise(ErrorCode::ParseError, "unexpected line '" + std::string(extra) + "'");
    }
    return std::move(parsed.matrix);
}

std::string format_code(const LinearCode& code, std::uint64_t dlog_limit)
{
    std::string out = format_matrix(code.generator(), dlog_limit);
    out += "params n=" + std::to_string(code.n()) + " k=" + std::to_string(code.k()) + " d=";
    const auto d = code.known_distance();
    out += d ? std::to_string(*d) : "?";
    out += '\n';
    return out;
}

LinearCode parse_code(std::string_view text)
{
    auto parsed = parse_matrix_block(text);
    std::optional<std::size_t> distance;
    if (parsed.trailer.size() > 1)
        raise(ErrorCode::ParseError, "unexpected trailing lines");
    if (parsed.trailer.size() == 1) {
        const auto parts = split_ws(parsed.trailer[0]);
        if (parts.size() != 4 || parts[0] != "params")
            raise(ErrorCode::ParseError, "bad params line '" + std::string(parsed.trailer[0]) + "'");
        const std::uint64_t n = parse_uint(value_of(parts[1], "n"), "n");
        const std::uint64_t k = parse_uint(value_of(parts[2], "k"), "k");
        if (n != parsed.matrix.cols() || k != parsed.matrix.rows())
            raise(ErrorCode::ParseError, "params disagree with matrix shape");
        const std::string_view d = value_of(parts[3], "d");
        if (d != "?")
            distance = parse_uint(d, "d");
    }
    return LinearCode(std::move(parsed.matrix), distance);
}

std::string format_dh(const DhDiagonal& diag, std::uint64_t dlog_limit)
{
    return format_matrix(FieldMatrix::from_rows({diag.entries()}), dlog_limit) + "# dh l=" + std::to_string(diag.l_value()) + "\n";
}

DhDiagonal parse_dh(std::string_view text)
{
    const FieldMatrix m = parse_matrix(text);
    if (m.rows() != 1)
        raise(ErrorCode::ParseError, "diagonal file must have exactly one row");
    return DhDiagonal(m.row(0));
}

std::string format_word(std::span<const Symbol> word, std::uint64_t dlog_limit)
{
    std::string out;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (i > 0)
            out += ' ';
        out += word[i] ? format_element(*word[i], dlog_limit) : "?";
    }
    return out + "\n";
}

std::string format_word(std::span<const FieldElement> word, std::uint64_t dlog_limit)
{
    std::string out;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (i > 0)
            out += ' ';
        out += format_element(word[i], dlog_limit);
    }
    return out + "\n";
}

std::vector<Symbol> parse_word(const FieldSpec& field, std::string_view text)
{
    const auto lines = payload_lines(text);
    if (lines.size() != 1)
        raise(ErrorCode::ParseError, "word must be a single line");
    std::vector<Symbol> out;
    for (std::string_view tok : split_ws(lines[0])) {
        if (tok == "?")
            out.emplace_back(std::nullopt);
        else
            out.emplace_back(parse_element(field, tok));
    }
    return out;
}

std::string strip_comments(std::string_view text)
{
    std::string out;
    for (std::string_view line : payload_lines(text)) {
        out += line;
        out += '\n';
    }
    return out;
}

} // namespace mdslift
