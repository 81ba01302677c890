#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "grh/blocks.hpp"
#include "grh/group.hpp"
#include "grh/hadamard.hpp"
#include "grh/matrix.hpp"
#include "grh/search.hpp"

namespace grh {

enum class Format { Text, Json };

Format parse_format(std::string_view name);

struct MatrixDocument {
  std::size_t order = 0;
  std::optional<std::string> group;
  std::optional<std::vector<Element>> listing;
  SignMatrix body;
};

/// Text: one row per line of '+'/'-' (whitespace ignored), '#' comments, optional
/// "order: m", "group: <name>" and "listing: a b c ..." headers. JSON documents
/// (starting with '{') use the keys order, group, listing, rows.
MatrixDocument parse_matrix_document(std::string_view text);
SignMatrix parse_sign_matrix(std::string_view text);
MatrixDocument read_matrix_file(const std::string& path);

std::string emit_matrix_document(const MatrixDocument& doc, Format format = Format::Text);
std::string emit_sign_matrix(const SignMatrix& m);
std::string sign_string(std::span<const int> row);
std::vector<int> parse_sign_row(std::string_view text);

std::string emit_report(const GramReport& r, Format format);
std::string emit_report(const SearchResult& r, Format format);
std::string emit_report(const ConditionsReport& r, Format format);
std::string emit_report(const MatchReport& r, Format format);
std::string emit_report(const QuadrupleReport& r, Format format);
std::string emit_listing(const std::optional<Listing>& listing, const std::string& group, Format format);

}  // namespace grh
