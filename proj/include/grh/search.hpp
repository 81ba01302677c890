#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace grh {

/// First rows are packed MSB-first: position k of an m-entry row is bit (m-1-k), and a set
/// bit means -1. Numeric order of masks is then lexicographic order of rows with + < -.
namespace bits {

using Mask = std::uint64_t;

inline constexpr std::size_t kMaxOrder = 63;

Mask row_to_mask(std::span<const int> row);
std::vector<int> mask_to_row(Mask mask, std::size_t m);
/// Cyclic left shift of the row by s positions (row'[k] = row[k+s]).
Mask rotate(Mask mask, std::size_t m, std::size_t s);
/// Periodic autocorrelation at shift s: m - 2 * popcount(mask ^ rotate(mask, s)).
std::int64_t paf_at(Mask mask, std::size_t m, std::size_t s);
bool paf_flat(Mask mask, std::size_t m);
/// Number of odd blocks in the paired-listing block system (m divisible by 4).
std::size_t odd_block_count(Mask mask, std::size_t m);
std::string to_string(Mask mask, std::size_t m);

}  // namespace bits

/// Lexicographically smallest row (with + < -) among all rotations and their negations.
std::vector<int> canonicalize(std::span<const int> row);
bits::Mask canonical_mask(bits::Mask mask, std::size_t m);

enum class Canonicalization { None, RotationNegation };
/// Which oracle decides the final stage: flat autocorrelation, or a full M*M^T check.
enum class FinalCheck { Paf, Gram };

struct SearchFilters {
  bool row_sum = true;
  bool balance = true;
  bool paf_prefix = true;

  static SearchFilters none() { return {false, false, false}; }
};

/// Orders above this need the row_sum filter and, for square orders, allow_large.
inline constexpr std::size_t kMaxRawEnumerationOrder = 28;

struct SearchConfig {
  std::size_t order = 4;
  SearchFilters filters;
  FinalCheck final_check = FinalCheck::Paf;
  /// Fraction of considered rows also checked with the full gram oracle, in [0, 1].
  double gram_crosscheck = 0.0;
  Canonicalization canonicalization = Canonicalization::RotationNegation;
  /// Rows are split into partitions by their first prefix_bits entries; 0 picks a default.
  std::size_t prefix_bits = 0;
  /// OpenMP thread count; 0 uses the runtime default.
  int workers = 0;
  bool allow_large = false;
  std::optional<std::filesystem::path> checkpoint;
};

struct StageCount {
  std::string name;
  bool enabled = true;
  std::uint64_t survivors = 0;

  friend bool operator==(const StageCount&, const StageCount&) = default;
};

struct SearchResult {
  std::size_t order = 0;
  /// All 2^m rows; the search enumerates rows with row[0] = +1 and doubles the counts.
  std::uint64_t considered = 0;
  /// row_sum, balance, paf_prefix, final; counts are raw (negation included).
  std::vector<StageCount> stages;
  Canonicalization canonicalization = Canonicalization::RotationNegation;
  /// Sorted; canonical representatives or raw rows depending on canonicalization.
  std::vector<bits::Mask> found;
  std::uint64_t found_raw = 0;
  std::uint64_t crosscheck_checked = 0;
  std::uint64_t crosscheck_mismatches = 0;
  std::size_t partitions = 0;
  std::size_t resumed_partitions = 0;
  double enumerate_ms = 0.0;
  double merge_ms = 0.0;

  const StageCount& stage(const std::string& name) const;
  std::vector<std::vector<int>> found_rows() const;
};

/// Every field except timings and resume bookkeeping.
bool same_outcome(const SearchResult& a, const SearchResult& b);

/// Validates a config; throws Error(Capacity) or Error(InvalidOrder).
void check_feasible(const SearchConfig& config);

/// OpenMP search over prefix partitions using bit-packed rows.
SearchResult search(const SearchConfig& config);

/// Single-threaded reference built on the scalar routines (paf, block_system, gram). No
/// checkpointing; intended for tests and benchmarks at small orders.
SearchResult search_serial(const SearchConfig& config);

}  // namespace grh
