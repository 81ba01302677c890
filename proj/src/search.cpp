#include "grh/search.hpp"

#include <omp.h>

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "grh/error.hpp"
#include "grh/group_ring.hpp"
#include "grh/hadamard.hpp"
#include "search_detail.hpp"

namespace grh {

namespace bits {

namespace {
Mask full_mask(std::size_t m) { return m >= 64 ? ~Mask{0} : (Mask{1} << m) - 1; }
}  // namespace

Mask row_to_mask(std::span<const int> row) {
  if (row.size() > kMaxOrder) throw Error(ErrorKind::Capacity, "row too long for a 64-bit mask");
  Mask mask = 0;
  for (int v : row) {
    if (v != 1 && v != -1) throw Error(ErrorKind::Domain, "row entries must be signs");
    mask = (mask << 1) | (v < 0 ? 1 : 0);
  }
  return mask;
}

std::vector<int> mask_to_row(Mask mask, std::size_t m) {
  std::vector<int> row(m);
  for (std::size_t k = 0; k < m; ++k) row[k] = ((mask >> (m - 1 - k)) & 1) ? -1 : 1;
  return row;
}

Mask rotate(Mask mask, std::size_t m, std::size_t s) {
  s %= m;
  if (s == 0) return mask;
  // Position k moves to k - s, i.e. bits move up by s.
  return ((mask << s) | (mask >> (m - s))) & full_mask(m);
}

std::int64_t paf_at(Mask mask, std::size_t m, std::size_t s) {
  return static_cast<std::int64_t>(m) - 2 * std::popcount(mask ^ rotate(mask, m, s));
}

bool paf_flat(Mask mask, std::size_t m) {
  for (std::size_t s = 1; s <= m / 2; ++s)
    if (paf_at(mask, m, s) != 0) return false;
  return true;
}

std::size_t odd_block_count(Mask mask, std::size_t m) {
  const std::size_t half = m / 2;
  const Mask low = full_mask(half);
  return static_cast<std::size_t>(std::popcount(((mask >> half) ^ mask) & low));
}

std::string to_string(Mask mask, std::size_t m) {
  std::string s(m, '+');
  for (std::size_t k = 0; k < m; ++k)
    if ((mask >> (m - 1 - k)) & 1) s[k] = '-';
  return s;
}

}  // namespace bits

bits::Mask canonical_mask(bits::Mask mask, std::size_t m) {
  const bits::Mask neg = ~mask & bits::full_mask(m);
  bits::Mask best = mask;
  for (std::size_t s = 0; s < m; ++s) best = std::min({best, bits::rotate(mask, m, s), bits::rotate(neg, m, s)});
  return best;
}

const StageCount& SearchResult::stage(const std::string& name) const {
  for (const auto& s : stages)
    if (s.name == name) return s;
  throw Error(ErrorKind::Structural, "no stage named " + name);
}

std::vector<std::vector<int>> SearchResult::found_rows() const {
  std::vector<std::vector<int>> out;
  for (auto mask : found) out.push_back(bits::mask_to_row(mask, order));
  return out;
}

bool same_outcome(const SearchResult& a, const SearchResult& b) {
  return a.order == b.order && a.considered == b.considered && a.stages == b.stages &&
         a.canonicalization == b.canonicalization && a.found == b.found && a.found_raw == b.found_raw &&
         a.crosscheck_checked == b.crosscheck_checked && a.crosscheck_mismatches == b.crosscheck_mismatches;
}

void check_feasible(const SearchConfig& config) {
  const std::size_t m = config.order;
  if (m == 0) throw Error(ErrorKind::InvalidOrder, "search order must be positive");
  if (m > bits::kMaxOrder)
    throw Error(ErrorKind::Capacity, "search order " + std::to_string(m) + " exceeds the 64-bit row limit of " +
                                         std::to_string(bits::kMaxOrder));
  if (!(config.gram_crosscheck >= 0.0 && config.gram_crosscheck <= 1.0))
    throw Error(ErrorKind::Precondition, "gram cross-check fraction must lie in [0, 1]");
  if (config.prefix_bits > m) throw Error(ErrorKind::Precondition, "prefix_bits cannot exceed the order");
  if (m > kMaxRawEnumerationOrder) {
    if (!config.filters.row_sum)
      throw Error(ErrorKind::Capacity, "raw enumeration is limited to m <= " + std::to_string(kMaxRawEnumerationOrder) +
                                           "; enable the row_sum filter for m = " + std::to_string(m));
    if (!admissible_negative_counts(m).empty() && !config.allow_large)
      throw Error(ErrorKind::Capacity, "m = " + std::to_string(m) + " is a perfect square above " +
                                           std::to_string(kMaxRawEnumerationOrder) +
                                           "; the row space is too large to finish without an explicit override");
  }
}

namespace detail {

std::size_t effective_prefix_bits(const SearchConfig& config) {
  if (config.prefix_bits != 0) return config.prefix_bits;
  const std::size_t m = config.order;
  if (m <= 10) return m;
  return std::min<std::size_t>(m - 8, 16);
}

bool crosscheck_sampled(bits::Mask mask, std::size_t m, double fraction) {
  if (fraction <= 0.0) return false;
  if (fraction >= 1.0) return true;
  // splitmix64 finalizer
  std::uint64_t z = mask + 0x9e3779b97f4a7c15ULL * (m + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  z ^= z >> 31;
  return static_cast<double>(z >> 11) < fraction * 9007199254740992.0;
}

bool balance_applicable(std::size_t m) { return m % 4 == 0; }

void Tally::add(const Tally& other) {
  considered += other.considered;
  row_sum += other.row_sum;
  balance += other.balance;
  paf_prefix += other.paf_prefix;
  final += other.final;
  checked += other.checked;
  mismatches += other.mismatches;
  found.insert(found.end(), other.found.begin(), other.found.end());
}

namespace {

std::uint64_t total_rows(std::size_t m) { return m >= 64 ? 0 : (std::uint64_t{1} << m); }

std::vector<StageCount> stage_list(const SearchConfig& config, std::uint64_t row_sum, std::uint64_t balance,
                                   std::uint64_t paf_prefix, std::uint64_t final) {
  return {
      {kStageRowSum, config.filters.row_sum, row_sum},
      {kStageBalance, config.filters.balance && balance_applicable(config.order), balance},
      {kStagePafPrefix, config.filters.paf_prefix, paf_prefix},
      {kStageFinal, true, final},
  };
}

}  // namespace

std::optional<SearchResult> decided_without_enumeration(const SearchConfig& config) {
  if (config.order <= kMaxRawEnumerationOrder || !config.filters.row_sum) return std::nullopt;
  if (!admissible_negative_counts(config.order).empty()) return std::nullopt;
  SearchResult r;
  r.order = config.order;
  r.considered = total_rows(config.order);
  r.canonicalization = config.canonicalization;
  r.stages = stage_list(config, 0, 0, 0, 0);
  return r;
}

SearchResult finish(const SearchConfig& config, const Tally& total, std::size_t partitions) {
  const auto t0 = std::chrono::steady_clock::now();
  const std::size_t m = config.order;
  SearchResult r;
  r.order = m;
  r.considered = 2 * total.considered;
  r.canonicalization = config.canonicalization;
  r.stages = stage_list(config, 2 * total.row_sum, 2 * total.balance, 2 * total.paf_prefix, 2 * total.final);
  r.found = total.found;
  std::sort(r.found.begin(), r.found.end());
  r.found.erase(std::unique(r.found.begin(), r.found.end()), r.found.end());
  r.found_raw = 2 * total.final;
  r.crosscheck_checked = total.checked;
  r.crosscheck_mismatches = total.mismatches;
  r.partitions = partitions;

  for (auto mask : r.found) {
    const auto row = bits::mask_to_row(mask, m);
    if (!is_hadamard(rg_sign_matrix(circulant_from_row(row), Listing::natural(cyclic_group(m)))).is_hadamard)
      throw std::logic_error("search reported a row that fails the gram oracle: " + bits::to_string(mask, m));
  }
  r.merge_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

}  // namespace detail

namespace {

using bits::Mask;

bool circulant_gram_hadamard(Mask mask, std::size_t m) {
  return is_hadamard(rg_sign_matrix(circulant_from_row(bits::mask_to_row(mask, m)), Listing::natural(cyclic_group(m))))
      .is_hadamard;
}

// Branch-and-bound on partial periodic autocorrelations. With positions 0..q-1 fixed, the
// terms row[k]*row[(k+s) mod m] whose both indices are < q are known; if their sum exceeds
// the number of unknown terms in absolute value, paf[s] cannot reach 0.
class PafPrefixBound {
 public:
  explicit PafPrefixBound(std::size_t m) : m_(m), partial_(m, 0), known_(m * (m + 1), 0), row_(m, 0) {
    for (std::size_t q = 1; q <= m; ++q)
      for (std::size_t s = 1; s < m; ++s) {
        std::size_t d = 0;
        for (std::size_t k = 0; k < q; ++k)
          if ((k + s) % m < q) ++d;
        known_[q * m + s] = d;
      }
  }

  /// Shortest prefix length whose bound already fails, or 0 if the full row survives.
  std::size_t first_dead_prefix(Mask mask) {
    for (std::size_t k = 0; k < m_; ++k) row_[k] = ((mask >> (m_ - 1 - k)) & 1) ? -1 : 1;
    std::fill(partial_.begin(), partial_.end(), 0);
    for (std::size_t p = 0; p < m_; ++p) {
      const std::size_t q = p + 1;
      bool dead = false;
      for (std::size_t s = 1; s < m_; ++s) {
        if (p >= s) partial_[s] += row_[p - s] * row_[p];
        if (p + s >= m_) partial_[s] += row_[p] * row_[p + s - m_];
        const std::int64_t unknown = static_cast<std::int64_t>(m_ - known_[q * m_ + s]);
        if (std::abs(partial_[s]) > unknown) dead = true;
      }
      if (dead) return q;
    }
    return 0;
  }

 private:
  std::size_t m_;
  std::vector<std::int64_t> partial_;
  std::vector<std::size_t> known_;
  std::vector<int> row_;
};

struct Pipeline {
  const SearchConfig& config;
  std::size_t m;
  std::vector<char> admissible;
  bool balance_on;

  explicit Pipeline(const SearchConfig& c) : config(c), m(c.order), admissible(c.order + 1, 0) {
    for (auto r : admissible_negative_counts(m)) admissible[r] = 1;
    balance_on = c.filters.balance && detail::balance_applicable(m);
  }

  detail::Tally run(Mask begin, Mask end) const {
    detail::Tally t;
    PafPrefixBound bound(m);
    Mask dead_until = begin;
    const bool canonical = config.canonicalization == Canonicalization::RotationNegation;
    for (Mask x = begin; x < end; ++x) {
      ++t.considered;
      if (detail::crosscheck_sampled(x, m, config.gram_crosscheck)) {
        ++t.checked;
        if (bits::paf_flat(x, m) != circulant_gram_hadamard(x, m)) ++t.mismatches;
      }
      if (config.filters.row_sum && !admissible[std::popcount(x)]) continue;
      ++t.row_sum;
      if (balance_on && bits::odd_block_count(x, m) != m / 4) continue;
      ++t.balance;
      if (config.filters.paf_prefix) {
        if (x < dead_until) continue;
        if (const std::size_t q = bound.first_dead_prefix(x); q != 0) {
          const std::size_t tail = m - q;
          dead_until = ((x >> tail) + 1) << tail;
          continue;
        }
      }
      ++t.paf_prefix;
      const bool pass = config.final_check == FinalCheck::Paf ? bits::paf_flat(x, m) : circulant_gram_hadamard(x, m);
      if (!pass) continue;
      ++t.final;
      if (canonical) {
        t.found.push_back(canonical_mask(x, m));
      } else {
        t.found.push_back(x);
        t.found.push_back(~x & ((Mask{1} << m) - 1));
      }
    }
    return t;
  }
};

std::string filters_tag(const SearchConfig& c) {
  std::ostringstream os;
  os << "row_sum=" << c.filters.row_sum << ",balance=" << c.filters.balance << ",paf_prefix=" << c.filters.paf_prefix
     << ",final=" << (c.final_check == FinalCheck::Paf ? "paf" : "gram") << ",crosscheck=" << c.gram_crosscheck
     << ",canonical=" << (c.canonicalization == Canonicalization::RotationNegation ? "rotation-negation" : "none");
  return os.str();
}

std::string checkpoint_header(const SearchConfig& c, std::size_t prefix_bits) {
  return "# grh-search order=" + std::to_string(c.order) + " prefix_bits=" + std::to_string(prefix_bits) + " " +
         filters_tag(c);
}

std::string checkpoint_line(std::uint64_t prefix, const detail::Tally& t) {
  std::ostringstream os;
  os << std::hex << "prefix=" << prefix << std::dec << " survivors=" << t.final << " considered=" << t.considered
     << " row_sum=" << t.row_sum << " balance=" << t.balance << " paf_prefix=" << t.paf_prefix
     << " checked=" << t.checked << " mismatches=" << t.mismatches << " found=";
  if (t.found.empty()) os << '-';
  for (std::size_t k = 0; k < t.found.size(); ++k) os << (k ? "," : "") << std::hex << t.found[k] << std::dec;
  return os.str();
}

// Parses completed partitions. Lines carrying only prefix and survivors are not enough to
// restore stage counts; those partitions are recomputed.
std::map<std::uint64_t, detail::Tally> load_checkpoint(const std::filesystem::path& path, const std::string& header) {
  std::map<std::uint64_t, detail::Tally> done;
  std::ifstream in(path);
  if (!in) return done;
  std::string line;
  std::size_t line_no = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    if (line[0] == '#') {
      if (line.rfind("# grh-search", 0) == 0) {
        if (line != header) throw FormatError(line_no, "checkpoint was written for a different search: " + line);
        header_seen = true;
      }
      continue;
    }
    std::istringstream fields(line);
    std::string tok;
    std::map<std::string, std::string> kv;
    while (fields >> tok) {
      const auto eq = tok.find('=');
      if (eq == std::string::npos) throw FormatError(line_no, "expected key=value, got '" + tok + "'");
      kv[tok.substr(0, eq)] = tok.substr(eq + 1);
    }
    if (!kv.count("prefix") || !kv.count("survivors")) throw FormatError(line_no, "missing prefix or survivors");
    if (!header_seen) throw FormatError(line_no, "checkpoint has no header");
    static const char* kFull[] = {"considered", "row_sum", "balance", "paf_prefix", "checked", "mismatches", "found"};
    if (!std::all_of(std::begin(kFull), std::end(kFull), [&](const char* k) { return kv.count(k) > 0; })) continue;
    try {
      detail::Tally t;
      t.final = std::stoull(kv["survivors"]);
      t.considered = std::stoull(kv["considered"]);
      t.row_sum = std::stoull(kv["row_sum"]);
      t.balance = std::stoull(kv["balance"]);
      t.paf_prefix = std::stoull(kv["paf_prefix"]);
      t.checked = std::stoull(kv["checked"]);
      t.mismatches = std::stoull(kv["mismatches"]);
      if (kv["found"] != "-") {
        std::istringstream list(kv["found"]);
        std::string item;
        while (std::getline(list, item, ',')) t.found.push_back(std::stoull(item, nullptr, 16));
      }
      done[std::stoull(kv["prefix"], nullptr, 16)] = std::move(t);
    } catch (const std::logic_error&) {
      throw FormatError(line_no, "malformed number in checkpoint line");
    }
  }
  return done;
}

}  // namespace

SearchResult search(const SearchConfig& config) {
  check_feasible(config);
  if (auto decided = detail::decided_without_enumeration(config)) return *decided;

  const auto t0 = std::chrono::steady_clock::now();
  const std::size_t m = config.order;
  const std::size_t p = detail::effective_prefix_bits(config);
  const std::size_t tail = m - p;
  // The first entry is fixed to +1, so prefixes range over the lower half.
  const std::uint64_t partitions = std::uint64_t{1} << (p - 1);

  std::map<std::uint64_t, detail::Tally> resumed;
  std::ofstream checkpoint;
  if (config.checkpoint) {
    const std::string header = checkpoint_header(config, p);
    resumed = load_checkpoint(*config.checkpoint, header);
    const bool fresh = !std::filesystem::exists(*config.checkpoint) || std::filesystem::file_size(*config.checkpoint) == 0;
    checkpoint.open(*config.checkpoint, std::ios::app);
    if (!checkpoint) throw Error(ErrorKind::Structural, "cannot open checkpoint " + config.checkpoint->string());
    if (fresh) checkpoint << header << '\n' << std::flush;
  }

  Pipeline pipeline(config);
  std::vector<detail::Tally> per_partition(partitions);
  const int workers = config.workers > 0 ? config.workers : omp_get_max_threads();
  const auto count = static_cast<std::int64_t>(partitions);

#pragma omp parallel for schedule(dynamic, 1) num_threads(workers)
  for (std::int64_t idx = 0; idx < count; ++idx) {
    const auto prefix = static_cast<std::uint64_t>(idx);
    if (auto it = resumed.find(prefix); it != resumed.end()) {
      per_partition[idx] = it->second;
      continue;
    }
    per_partition[idx] = pipeline.run(prefix << tail, (prefix + 1) << tail);
    if (config.checkpoint) {
      const std::string line = checkpoint_line(prefix, per_partition[idx]);
#pragma omp critical(grh_checkpoint)
      checkpoint << line << '\n' << std::flush;
    }
  }

  detail::Tally total;
  for (const auto& t : per_partition) total.add(t);
  const double enumerate_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

  SearchResult r = detail::finish(config, total, partitions);
  r.enumerate_ms = enumerate_ms;
  r.resumed_partitions = std::count_if(resumed.begin(), resumed.end(), [&](const auto& kv) { return kv.first < partitions; });
  return r;
}

}  // namespace grh
