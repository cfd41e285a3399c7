// SPDX-License-Identifier: Apache-2.0

#include "mdslift/erasure.hpp"

#include "mdslift/error.hpp"

#include <algorithm>

namespace mdslift {

ErasureWord::ErasureWord(LinearCode code, std::vector<Symbol> symbols)
    : code_(std::move(code)), symbols_(std::move(symbols))
{
    if (symbols_.size() != code_.n())
        raise(ErrorCode::DimensionMismatch,
              "word has " + std::to_string(symbols_.size()) + " symbols, code length is " + std::to_string(code_.n()));
    for (const Symbol& s : symbols_) {
        if (s && !(s->field() == code_.field()))
            raise(ErrorCode::FieldMismatch, "symbol not in " + code_.field().describe());
    }
}

std::size_t ErasureWord::erasure_count() const noexcept
{
    return static_cast<std::size_t>(
        std::count_if(symbols_.begin(), symbols_.end(), [](const Symbol& s) { return !s.has_value(); }));
}

FieldMatrix systematic_generator(const LinearCode& code)
{
    if (is_systematic(code.generator()))
        return code.generator();
    return to_systematic(code.generator());
}

std::vector<FieldElement> erasure_encode(const LinearCode& code, std::span<const FieldElement> message)
{
    return vec_mul(message, systematic_generator(code));
}

std::vector<Symbol> erase(std::span<const FieldElement> codeword, std::span<const std::size_t> positions)
{
    std::vector<Symbol> out(codeword.begin(), codeword.end());
    for (std::size_t pos : positions) {
        if (pos >= out.size())
            raise(ErrorCode::IndexOutOfRange, "erasure position " + std::to_string(pos));
        out[pos].reset();
    }
    return out;
}

std::vector<FieldElement> erasure_decode(const ErasureWord& word)
{
    const LinearCode& code = word.code();
    const std::size_t n = code.n();
    const std::size_t k = code.k();
    const std::size_t erased = word.erasure_count();
    if (erased > n - k)
        raise(ErrorCode::TooManyErasures,
              std::to_string(erased) + " erasures, at most " + std::to_string(n - k) + " correctable");

    const FieldMatrix g = systematic_generator(code);
    std::vector<std::size_t> cols;
    std::vector<FieldElement> received;
    for (std::size_t j = 0; j < n && cols.size() < k; ++j) {
        if (word.symbols()[j]) {
            cols.push_back(j);
            received.push_back(*word.symbols()[j]);
        }
    }
    std::vector<std::size_t> all_rows(k);
    for (std::size_t i = 0; i < k; ++i)
        all_rows[i] = i;

    // m * S = y  <=>  S^T * m^T = y^T
    const FieldMatrix block = submatrix(g, all_rows, cols).transpose();
    std::vector<FieldElement> message = solve(block, received);

    const std::vector<FieldElement> codeword = vec_mul(message, g);
    for (std::size_t j = 0; j < n; ++j) {
        const Symbol& s = word.symbols()[j];
        if (s && !(*s == codeword[j]))
            raise(ErrorCode::Inconsistent, "symbol " + std::to_string(j) + " does not match any codeword");
    }
    return message;
}

} // namespace mdslift
