#include "grh/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "grh/blocks.hpp"
#include "grh/constructions.hpp"
#include "grh/error.hpp"
#include "grh/group_ring.hpp"
#include "grh/hadamard.hpp"
#include "grh/io.hpp"
#include "grh/search.hpp"
#include "json.hpp"

namespace grh {

namespace {

using nlohmann::json;

struct Options {
  std::string format = "text";

  std::string verify_file;
  std::string verify_group;
  std::string verify_listing = "auto";

  std::size_t order = 0;
  std::vector<std::string> no_filter;
  int workers = 0;
  std::string checkpoint;
  std::size_t prefix_bits = 0;
  double crosscheck = 0.0;
  bool gram_sweep = false;
  std::string canonical = "rotation-negation";
  bool allow_large = false;

  std::string row;
  std::vector<std::size_t> quadruple;

  std::string family;
  std::string extend;
  std::size_t times = 0;
  std::string out_file;

  std::string recover_file;
  std::string recover_group;
};

std::optional<Listing> listing_for(const MatrixDocument& doc, const GroupPtr& group, const std::string& mode) {
  const SignMatrix& m = doc.body;
  if (mode == "natural") return Listing::natural(group);
  if (mode == "paired") {
    if (group->name() != "C" + std::to_string(group->order()))
      throw Error(ErrorKind::Precondition, "the paired listing is defined for cyclic groups only");
    Listing p = paired_listing(group->order());
    return Listing(group, {p.perm().begin(), p.perm().end()});
  }
  if (mode == "auto") {
    // A listing stored in the file is trusted as the claim to check; otherwise search for one.
    if (doc.listing) return Listing(group, *doc.listing);
    return recover_listing(m, group);
  }
  throw Error(ErrorKind::Format, "unknown listing mode '" + mode + "'");
}

int cmd_verify(const Options& o, Format fmt, std::ostream& out) {
  const MatrixDocument doc = read_matrix_file(o.verify_file);
  const GramReport report = is_hadamard(doc.body);
  const bool regular = is_regular(doc.body);
  const std::string group_name = !o.verify_group.empty() ? o.verify_group : doc.group.value_or("");

  std::optional<bool> rg_ok;
  std::optional<Listing> listing;
  if (!group_name.empty()) {
    GroupPtr group = group_by_name(group_name);
    if (group->order() != doc.order)
      throw Error(ErrorKind::Structural, "group " + group_name + " has order " + std::to_string(group->order()) +
                                             " but the matrix is " + std::to_string(doc.order) + "x" +
                                             std::to_string(doc.order));
    listing = listing_for(doc, group, o.verify_listing);
    rg_ok = listing && is_rg_matrix(doc.body, *listing);
  }

  if (fmt == Format::Json) {
    json j = json::parse(emit_report(report, Format::Json));
    j["regular"] = regular;
    if (rg_ok) {
      j["rg_matrix"] = *rg_ok;
      j["group"] = group_name;
      j["listing"] = listing ? json(std::vector<Element>(listing->perm().begin(), listing->perm().end())) : json(nullptr);
    }
    out << j.dump(2) << "\n";
  } else {
    out << emit_report(report, Format::Text) << "regular: " << (regular ? "true" : "false") << "\n";
    if (rg_ok) {
      out << "group: " << group_name << "\n"
          << "rg_matrix: " << (*rg_ok ? "true" : "false") << "\n";
      if (listing) {
        out << "listing:";
        for (auto e : listing->perm()) out << " " << e;
        out << "\n";
      } else {
        out << "listing: not-found\n";
      }
    }
  }
  return (report.is_hadamard && rg_ok.value_or(true)) ? kExitTrue : kExitFalse;
}

int cmd_search(const Options& o, Format fmt, std::ostream& out, std::ostream& err) {
  SearchConfig c;
  c.order = o.order;
  for (const auto& name : o.no_filter) {
    if (name == "row_sum") c.filters.row_sum = false;
    else if (name == "balance") c.filters.balance = false;
    else if (name == "paf_prefix") c.filters.paf_prefix = false;
    else if (name == "all") c.filters = SearchFilters::none();
    else throw Error(ErrorKind::Format, "unknown filter '" + name + "'");
  }
  c.workers = o.workers;
  if (!o.checkpoint.empty()) c.checkpoint = o.checkpoint;
  c.prefix_bits = o.prefix_bits;
  c.gram_crosscheck = o.crosscheck;
  c.final_check = o.gram_sweep ? FinalCheck::Gram : FinalCheck::Paf;
  if (o.canonical == "none") c.canonicalization = Canonicalization::None;
  else if (o.canonical == "rotation-negation") c.canonicalization = Canonicalization::RotationNegation;
  else throw Error(ErrorKind::Format, "unknown canonicalization '" + o.canonical + "'");
  c.allow_large = o.allow_large;

  const SearchResult r = search(c);
  out << emit_report(r, fmt);
  err << "enumerate " << r.enumerate_ms << " ms, merge " << r.merge_ms << " ms, resumed partitions "
      << r.resumed_partitions << "\n";
  return kExitTrue;
}

int cmd_analyze(const Options& o, Format fmt, std::ostream& out) {
  const std::vector<int> row = parse_sign_row(o.row);
  const BlockSystem s = block_system(row);
  const ConditionsReport cond = conditions_report(s);
  const MatchReport even = matching_report(s, BlockKind::Even);
  const MatchReport odd = matching_report(s, BlockKind::Odd);
  std::optional<QuadrupleReport> quad;
  if (!o.quadruple.empty()) {
    if (o.quadruple.size() != 2) throw Error(ErrorKind::Format, "--quadruple takes two block indices");
    quad = quadruple_remainders(s, o.quadruple[0], o.quadruple[1]);
  }

  if (fmt == Format::Json) {
    json j;
    j["row"] = sign_string(row);
    j["conditions"] = json::parse(emit_report(cond, Format::Json));
    j["matching_even"] = json::parse(emit_report(even, Format::Json));
    j["matching_odd"] = json::parse(emit_report(odd, Format::Json));
    if (quad) j["quadruple"] = json::parse(emit_report(*quad, Format::Json));
    out << j.dump(2) << "\n";
  } else {
    out << "row: " << sign_string(row) << "\n"
        << emit_report(cond, Format::Text) << emit_report(even, Format::Text) << emit_report(odd, Format::Text);
    if (quad) out << emit_report(*quad, Format::Text);
  }
  const bool ok = cond.balance_ok && cond.even.differences_even && cond.odd.differences_even &&
                  even.perfect_matching_found && odd.perfect_matching_found;
  return ok ? kExitTrue : kExitFalse;
}

int cmd_construct(const Options& o, Format fmt, std::ostream& out) {
  NamedConstruction c = construction_by_family(o.family);
  if (!o.extend.empty()) {
    if (o.extend != "c4" && o.extend != "c2c2") throw Error(ErrorKind::Format, "--extend takes c4 or c2c2");
    c = extend_times(std::move(c), construction_by_family(o.extend), o.times);
  } else if (o.times != 0) {
    throw Error(ErrorKind::Format, "--times needs --extend");
  }
  MatrixDocument doc;
  doc.order = c.matrix.size();
  doc.group = c.group->name();
  doc.listing = std::vector<Element>(c.listing->perm().begin(), c.listing->perm().end());
  doc.body = c.matrix;
  const std::string text = emit_matrix_document(doc, fmt);
  if (o.out_file.empty()) {
    out << text;
  } else {
    std::ofstream file(o.out_file);
    if (!file) throw Error(ErrorKind::Format, "cannot write " + o.out_file);
    file << text;
  }
  return kExitTrue;
}

int cmd_recover(const Options& o, Format fmt, std::ostream& out) {
  const MatrixDocument doc = read_matrix_file(o.recover_file);
  GroupPtr group = group_by_name(o.recover_group);
  if (group->order() != doc.order)
    throw Error(ErrorKind::Structural, "group " + o.recover_group + " does not match the matrix order");
  const auto listing = recover_listing(doc.body, group);
  out << emit_listing(listing, group->name(), fmt);
  return listing ? kExitTrue : kExitFalse;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Group-ring Hadamard toolkit: RG-matrices, circulant searches and block analysis"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));

  auto* verify = app.add_subcommand("verify", "Check a sign matrix for the Hadamard property and RG-structure");
  verify->add_option("file", o.verify_file, "Matrix file")->required();
  verify->add_option("--group", o.verify_group, "Group name, e.g. C4, C2xC8, Q8xC2");
  verify->add_option("--listing", o.verify_listing, "natural, paired or auto (the file's listing if present, else a recovered one)")
      ->check(CLI::IsMember({"natural", "paired", "auto"}));

  auto* srch = app.add_subcommand("search", "Enumerate circulant Hadamard first rows of a given order");
  srch->add_option("--order", o.order, "Matrix order m")->required();
  srch->add_option("--no-filter", o.no_filter, "Disable a filter: row_sum, balance, paf_prefix or all");
  srch->add_option("--workers", o.workers, "Worker threads");
  srch->add_option("--checkpoint", o.checkpoint, "Checkpoint file (resumed if present)");
  srch->add_option("--prefix-bits", o.prefix_bits, "Row entries that define a work partition");
  srch->add_option("--crosscheck", o.crosscheck, "Fraction of rows also checked with the full gram oracle");
  srch->add_flag("--gram-sweep", o.gram_sweep, "Decide the final stage with M*M^T instead of autocorrelation");
  srch->add_option("--canonical", o.canonical, "none or rotation-negation");
  srch->add_flag("--allow-large", o.allow_large, "Permit square orders above the raw enumeration bound");

  auto* analyze = app.add_subcommand("analyze", "Block-system conditions and matchings for a first row");
  analyze->add_option("--row", o.row, "First row as a +/- string")->required();
  analyze->add_option("--quadruple", o.quadruple, "Two symmetric odd block indices i < j")->expected(2);

  auto* construct = app.add_subcommand("construct", "Emit one of the explicit Hadamard RG-matrices");
  construct->add_option("--family", o.family, "c4, c2c2, c2c8 or q8c2")
      ->required()
      ->check(CLI::IsMember({"c4", "c2c2", "c2c8", "q8c2"}));
  construct->add_option("--extend", o.extend, "Kronecker factor: c4 or c2c2");
  construct->add_option("--times", o.times, "Number of Kronecker factors");
  construct->add_option("--out", o.out_file, "Output file");

  auto* recover = app.add_subcommand("recover", "Find a listing that makes a matrix an RG-matrix");
  recover->add_option("--file", o.recover_file, "Matrix file")->required();
  recover->add_option("--group", o.recover_group, "Group name")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitTrue : kExitUsage;
  }

  try {
    const Format fmt = parse_format(o.format);
    if (*verify) return cmd_verify(o, fmt, out);
    if (*srch) return cmd_search(o, fmt, out, err);
    if (*analyze) return cmd_analyze(o, fmt, out);
    if (*construct) return cmd_construct(o, fmt, out);
    if (*recover) return cmd_recover(o, fmt, out);
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return e.kind() == ErrorKind::Capacity ? kExitCapacity : kExitUsage;
  }
  return kExitUsage;
}

}  // namespace grh
