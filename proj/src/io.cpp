#include "grh/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "grh/error.hpp"
#include "json.hpp"

namespace grh {

using nlohmann::json;

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool starts_with(std::string_view s, std::string_view prefix) { return s.substr(0, prefix.size()) == prefix; }

std::vector<int> signs_of(std::string_view text, std::size_t line) {
  std::vector<int> row;
  for (char ch : text) {
    if (ch == '+') row.push_back(1);
    else if (ch == '-') row.push_back(-1);
    else if (!std::isspace(static_cast<unsigned char>(ch)))
      throw FormatError(line, std::string("illegal character '") + ch + "'");
  }
  return row;
}

std::size_t parse_count(std::string_view text, std::size_t line) {
  const std::string s(trim(text));
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }))
    throw FormatError(line, "expected a non-negative integer, got '" + s + "'");
  return std::stoul(s);
}

SignMatrix square_from_rows(const std::vector<std::vector<int>>& rows, std::size_t last_line) {
  if (rows.empty()) throw FormatError(last_line, "matrix has no rows");
  if (rows.size() != rows.front().size())
    throw FormatError(last_line, "matrix is " + std::to_string(rows.size()) + "x" + std::to_string(rows.front().size()) +
                                     ", not square");
  return SignMatrix::from_rows(rows);
}

MatrixDocument parse_json_document(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(1, std::string("invalid JSON: ") + e.what());
  }
  MatrixDocument doc;
  try {
    std::vector<std::vector<int>> rows;
    std::size_t k = 0;
    for (const auto& r : j.at("rows")) {
      ++k;
      auto row = signs_of(r.get<std::string>(), k);
      if (!rows.empty() && row.size() != rows.front().size()) throw FormatError(k, "ragged row");
      rows.push_back(std::move(row));
    }
    doc.body = square_from_rows(rows, k);
    doc.order = doc.body.size();
    if (j.contains("order") && j["order"].get<std::size_t>() != doc.order)
      throw FormatError(1, "declared order does not match the rows");
    if (j.contains("group") && !j["group"].is_null()) doc.group = j["group"].get<std::string>();
    if (j.contains("listing") && !j["listing"].is_null()) doc.listing = j["listing"].get<std::vector<Element>>();
  } catch (const json::exception& e) {
    throw FormatError(1, std::string("bad matrix document: ") + e.what());
  }
  return doc;
}

}  // namespace

Format parse_format(std::string_view name) {
  if (name == "text") return Format::Text;
  if (name == "json") return Format::Json;
  throw Error(ErrorKind::Format, "unknown format '" + std::string(name) + "'");
}

MatrixDocument parse_matrix_document(std::string_view text) {
  if (starts_with(trim(text), "{")) return parse_json_document(text);

  MatrixDocument doc;
  std::optional<std::size_t> declared;
  std::vector<std::vector<int>> rows;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = trim(text.substr(start, end - start));
    start = end + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    if (starts_with(line, "order:")) {
      declared = parse_count(line.substr(6), line_no);
    } else if (starts_with(line, "group:")) {
      doc.group = std::string(trim(line.substr(6)));
    } else if (starts_with(line, "listing:")) {
      std::vector<Element> listing;
      std::istringstream in{std::string(line.substr(8))};
      std::string tok;
      while (in >> tok) listing.push_back(static_cast<Element>(parse_count(tok, line_no)));
      doc.listing = std::move(listing);
    } else {
      auto row = signs_of(line, line_no);
      if (!rows.empty() && row.size() != rows.front().size())
        throw FormatError(line_no, "ragged row: expected " + std::to_string(rows.front().size()) + " entries, found " +
                                       std::to_string(row.size()));
      rows.push_back(std::move(row));
    }
  }
  doc.body = square_from_rows(rows, line_no);
  doc.order = doc.body.size();
  if (declared && *declared != doc.order)
    throw FormatError(line_no, "declared order " + std::to_string(*declared) + " but found " + std::to_string(doc.order));
  return doc;
}

SignMatrix parse_sign_matrix(std::string_view text) { return parse_matrix_document(text).body; }

MatrixDocument read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Format, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_matrix_document(buf.str());
}

std::string sign_string(std::span<const int> row) {
  std::string s;
  for (int v : row) s += v > 0 ? '+' : '-';
  return s;
}

std::vector<int> parse_sign_row(std::string_view text) {
  auto row = signs_of(text, 1);
  if (row.empty()) throw FormatError(1, "empty sign row");
  return row;
}

namespace {

std::string row_string(const SignMatrix& m, std::size_t r) {
  std::string s;
  for (auto v : m.row(r)) s += v > 0 ? '+' : '-';
  return s;
}

const char* bool_str(bool b) { return b ? "true" : "false"; }

template <typename Seq>
std::string joined(const Seq& values) {
  std::ostringstream os;
  bool first = true;
  for (const auto& v : values) {
    os << (first ? "" : " ") << v;
    first = false;
  }
  return os.str();
}

json pair_json(const PairInfo& p) {
  return {{"i", p.i}, {"j", p.j}, {"difference", p.difference}, {"sign", p.sign},
          {"conjugate_difference", p.conjugate_difference}};
}

std::string pair_text(const PairInfo& p) {
  std::ostringstream os;
  os << "(" << p.i << "," << p.j << ") d=" << p.difference << " sign=" << (p.sign > 0 ? "+" : "-");
  return os.str();
}

json kind_json(const KindConditions& k) {
  json diffs = json::object();
  for (const auto& [d, c] : k.differences) diffs[std::to_string(d)] = c;
  return {{"indices", k.indices}, {"differences", diffs}, {"differences_even", k.differences_even},
          {"all_symmetric", k.all_symmetric}};
}

}  // namespace

std::string emit_sign_matrix(const SignMatrix& m) {
  std::string out;
  for (std::size_t r = 0; r < m.size(); ++r) out += row_string(m, r) + "\n";
  return out;
}

std::string emit_matrix_document(const MatrixDocument& doc, Format format) {
  if (format == Format::Json) {
    json j;
    j["order"] = doc.order;
    j["group"] = doc.group ? json(*doc.group) : json(nullptr);
    j["listing"] = doc.listing ? json(*doc.listing) : json(nullptr);
    json rows = json::array();
    for (std::size_t r = 0; r < doc.body.size(); ++r) rows.push_back(row_string(doc.body, r));
    j["rows"] = rows;
    return j.dump(2) + "\n";
  }
  std::string out = "order: " + std::to_string(doc.order) + "\n";
  if (doc.group) out += "group: " + *doc.group + "\n";
  if (doc.listing) out += "listing: " + joined(*doc.listing) + "\n";
  return out + emit_sign_matrix(doc.body);
}

std::string emit_report(const GramReport& r, Format format) {
  if (format == Format::Json) {
    json j = {{"order", r.order},
              {"hadamard", r.is_hadamard},
              {"diagonal_values", r.diagonal_values},
              {"max_off_diagonal", r.max_off_diagonal},
              {"row_sums", r.row_sums},
              {"column_sums", r.column_sums},
              {"row_negatives", r.row_negatives},
              {"column_negatives", r.column_negatives}};
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "order: " << r.order << "\n"
     << "hadamard: " << bool_str(r.is_hadamard) << "\n"
     << "diagonal: " << joined(r.diagonal_values) << "\n"
     << "max_off_diagonal: " << r.max_off_diagonal << "\n"
     << "row_sums: " << joined(r.row_sums) << "\n"
     << "column_sums: " << joined(r.column_sums) << "\n"
     << "row_negatives: " << joined(r.row_negatives) << "\n"
     << "column_negatives: " << joined(r.column_negatives) << "\n";
  return os.str();
}

std::string emit_report(const SearchResult& r, Format format) {
  const char* canon = r.canonicalization == Canonicalization::RotationNegation ? "rotation-negation" : "none";
  std::vector<std::string> found;
  for (auto mask : r.found) found.push_back(bits::to_string(mask, r.order));
  if (format == Format::Json) {
    json stages = json::array();
    for (const auto& s : r.stages) stages.push_back({{"name", s.name}, {"enabled", s.enabled}, {"survivors", s.survivors}});
    json j = {{"order", r.order},
              {"considered", r.considered},
              {"stages", stages},
              {"canonicalization", canon},
              {"found", found},
              {"found_count", r.found.size()},
              {"found_raw", r.found_raw},
              {"crosscheck_checked", r.crosscheck_checked},
              {"crosscheck_mismatches", r.crosscheck_mismatches},
              {"partitions", r.partitions}};
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "order: " << r.order << "\n"
     << "considered: " << r.considered << "\n";
  for (const auto& s : r.stages)
    os << "stage " << s.name << ": " << s.survivors << (s.enabled ? "" : " (disabled)") << "\n";
  os << "canonicalization: " << canon << "\n"
     << "found: " << r.found.size() << "\n"
     << "found_raw: " << r.found_raw << "\n";
  for (const auto& f : found) os << "  " << f << "\n";
  os << "crosscheck: checked " << r.crosscheck_checked << ", mismatches " << r.crosscheck_mismatches << "\n"
     << "partitions: " << r.partitions << "\n";
  return os.str();
}

std::string emit_report(const ConditionsReport& r, Format format) {
  if (format == Format::Json) {
    json partner = json::array();
    for (const auto& p : r.partner) partner.push_back(p ? json(*p) : json(nullptr));
    std::vector<bool> symmetric(r.symmetric.begin(), r.symmetric.end());
    json j = {{"n", r.n},
              {"even_count", r.even_count},
              {"odd_count", r.odd_count},
              {"balance_ok", r.balance_ok},
              {"even", kind_json(r.even)},
              {"odd", kind_json(r.odd)},
              {"symmetric", symmetric},
              {"partner", partner}};
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "n: " << r.n << "\n"
     << "even: " << r.even_count << ", odd: " << r.odd_count << ", balanced: " << bool_str(r.balance_ok) << "\n";
  for (const auto* kind : {&r.even, &r.odd}) {
    os << (kind == &r.even ? "even" : "odd") << " blocks: " << joined(kind->indices) << "\n  differences:";
    for (const auto& [d, c] : kind->differences) os << " " << d << "x" << c;
    os << "\n  differences_even: " << bool_str(kind->differences_even)
       << "\n  all_symmetric: " << bool_str(kind->all_symmetric) << "\n";
  }
  return os.str();
}

std::string emit_report(const MatchReport& r, Format format) {
  if (format == Format::Json) {
    json matching = json::array();
    for (const auto& [a, b] : r.matching) matching.push_back({pair_json(a), pair_json(b)});
    json j = {{"kind", to_string(r.kind)},
              {"pair_count", r.pair_count},
              {"perfect_matching_found", r.perfect_matching_found},
              {"matching", matching},
              {"unmatched", r.unmatched ? pair_json(*r.unmatched) : json(nullptr)}};
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "matching (" << to_string(r.kind) << "): pairs " << r.pair_count
     << ", perfect: " << bool_str(r.perfect_matching_found) << "\n";
  for (const auto& [a, b] : r.matching) os << "  " << pair_text(a) << " ~ " << pair_text(b) << "\n";
  if (r.unmatched) os << "  unmatched: " << pair_text(*r.unmatched) << "\n";
  return os.str();
}

std::string emit_report(const QuadrupleReport& r, Format format) {
  if (format == Format::Json) {
    json matched = json::array();
    for (const auto& [a, b] : r.matched) matched.push_back({pair_json(a), pair_json(b)});
    json rem = json::array();
    for (const auto& p : r.remainders) rem.push_back(pair_json(p));
    json j = {{"i", r.i}, {"j", r.j}, {"i_partner", r.i_partner}, {"j_partner", r.j_partner},
              {"direct_pairs_match", r.direct_pairs_match}, {"cross_pairs_match", r.cross_pairs_match},
              {"dichotomy_holds", r.dichotomy_holds}, {"matched", matched}, {"remainders", rem}};
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "T(" << r.i << "," << r.j << ") = {" << r.i << "," << r.j << "," << r.i_partner << "," << r.j_partner << "}\n"
     << "  direct match: " << bool_str(r.direct_pairs_match) << ", cross match: " << bool_str(r.cross_pairs_match)
     << ", dichotomy: " << bool_str(r.dichotomy_holds) << "\n  remainders:";
  for (const auto& p : r.remainders) os << " " << pair_text(p) << ";";
  os << "\n";
  return os.str();
}

std::string emit_listing(const std::optional<Listing>& listing, const std::string& group, Format format) {
  if (format == Format::Json) {
    json j = {{"group", group}, {"found", listing.has_value()}};
    j["listing"] = listing ? json(std::vector<Element>(listing->perm().begin(), listing->perm().end())) : json(nullptr);
    return j.dump(2) + "\n";
  }
  if (!listing) return "group: " + group + "\nlisting: not-found\n";
  return "group: " + group + "\nlisting: " + joined(listing->perm()) + "\n";
}

}  // namespace grh
