// SPDX-License-Identifier: Apache-2.0

#ifndef MDSLIFT_ERASURE_HPP
#define MDSLIFT_ERASURE_HPP

#include "mdslift/codes.hpp"

#include <optional>
#include <span>
#include <vector>

namespace mdslift {

using Symbol = std::optional<FieldElement>; // nullopt marks an erasure

/// Received word: n symbols, some erased, tied to the code that produced it.
class ErasureWord {
public:
    ErasureWord(LinearCode code, std::vector<Symbol> symbols);

    const LinearCode& code() const noexcept { return code_; }
    const std::vector<Symbol>& symbols() const noexcept { return symbols_; }
    std::size_t erasure_count() const noexcept;

private:
    LinearCode code_;
    std::vector<Symbol> symbols_;
};

/// The code's generator if already [I_k | A], otherwise its reduced form.
FieldMatrix systematic_generator(const LinearCode& code);

/// message * systematic_generator(code); the first k symbols equal the message.
std::vector<FieldElement> erasure_encode(const LinearCode& code, std::span<const FieldElement> message);

/// Copy of the codeword with the given positions erased.
std::vector<Symbol> erase(std::span<const FieldElement> codeword, std::span<const std::size_t> positions);

/**
 * Recovers the message from at most n - k erasures.
 *
 * Solves on the k lowest-index surviving positions, then re-checks every
 * surviving symbol against the re-encoded word.
 */
std::vector<FieldElement> erasure_decode(const ErasureWord& word);

} // namespace mdslift

#endif // MDSLIFT_ERASURE_HPP
