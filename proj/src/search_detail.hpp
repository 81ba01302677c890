#pragma once

#include <cstdint>
#include <optional>

#include "grh/search.hpp"

namespace grh::detail {

inline constexpr const char* kStageRowSum = "row_sum";
inline constexpr const char* kStageBalance = "balance";
inline constexpr const char* kStagePafPrefix = "paf_prefix";
inline constexpr const char* kStageFinal = "final";

std::size_t effective_prefix_bits(const SearchConfig& config);

/// Deterministic per-row sampling for the gram cross-check.
bool crosscheck_sampled(bits::Mask mask, std::size_t m, double fraction);

/// Results for configurations that are decided without enumerating (row_sum filter on an
/// order above the raw-enumeration bound that is not a perfect square).
std::optional<SearchResult> decided_without_enumeration(const SearchConfig& config);

/// Per-partition tallies, counted over enumerated rows (row[0] = +1).
struct Tally {
  std::uint64_t considered = 0;
  std::uint64_t row_sum = 0;
  std::uint64_t balance = 0;
  std::uint64_t paf_prefix = 0;
  std::uint64_t final = 0;
  std::uint64_t checked = 0;
  std::uint64_t mismatches = 0;
  std::vector<bits::Mask> found;

  void add(const Tally& other);
};

/// Doubles the tallies for negation, expands or canonicalizes the found rows, verifies each
/// found row with the full gram oracle, and fills the stage list.
SearchResult finish(const SearchConfig& config, const Tally& total, std::size_t partitions);

bool balance_applicable(std::size_t m);

}  // namespace grh::detail
