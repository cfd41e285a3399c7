// SPDX-License-Identifier: Apache-2.0

#ifndef MDSLIFT_TEXT_FORMAT_HPP
#define MDSLIFT_TEXT_FORMAT_HPP

#include "mdslift/erasure.hpp"
#include "mdslift/lifting.hpp"

#include <string>
#include <string_view>

namespace mdslift {

// Matrix text format v1, newline delimited, '#' starts a comment:
//
//   mdslift-matrix v1
//   field p=<p> t=<t>[ modulus=<c0,...,ct>]
//   rows=<r> cols=<c>
//   <r lines of c element tokens>
//
// Codes append "params n=<n> k=<k> d=<d|?>". Diagonals are 1-row matrices
// followed by "# dh l=<l>".

inline constexpr std::string_view kMatrixHeader = "mdslift-matrix v1";

std::string format_field_line(const FieldSpec& field);
std::string format_matrix(const FieldMatrix& m, std::uint64_t dlog_limit = kDefaultDlogLimit);
FieldMatrix parse_matrix(std::string_view text);

std::string format_code(const LinearCode& code, std::uint64_t dlog_limit = kDefaultDlogLimit);
LinearCode parse_code(std::string_view text);

std::string format_dh(const DhDiagonal& diag, std::uint64_t dlog_limit = kDefaultDlogLimit);
DhDiagonal parse_dh(std::string_view text);

/// One line of n tokens; erasures are spelled "?".
std::string format_word(std::span<const Symbol> word, std::uint64_t dlog_limit = kDefaultDlogLimit);
std::string format_word(std::span<const FieldElement> word, std::uint64_t dlog_limit = kDefaultDlogLimit);
std::vector<Symbol> parse_word(const FieldSpec& field, std::string_view text);

/// Text with every comment and blank line removed.
std::string strip_comments(std::string_view text);

} // namespace mdslift

#endif // MDSLIFT_TEXT_FORMAT_HPP
