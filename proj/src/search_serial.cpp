#include <algorithm>
#include <chrono>
#include <cstdlib>

#include "grh/blocks.hpp"
#include "grh/error.hpp"
#include "grh/group_ring.hpp"
#include "grh/hadamard.hpp"
#include "grh/search.hpp"
#include "search_detail.hpp"

namespace grh {

namespace {

// + sorts before -.
bool row_less(const std::vector<int>& a, const std::vector<int>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), [](int x, int y) { return x > y; });
}

bool prefix_bound_survives(const std::vector<int>& row) {
  const std::size_t m = row.size();
  for (std::size_t q = 1; q <= m; ++q)
    for (std::size_t s = 1; s < m; ++s) {
      std::int64_t partial = 0;
      std::int64_t known = 0;
      for (std::size_t k = 0; k < q; ++k) {
        const std::size_t other = (k + s) % m;
        if (other < q) {
          partial += row[k] * row[other];
          ++known;
        }
      }
      if (std::llabs(partial) > static_cast<std::int64_t>(m) - known) return false;
    }
  return true;
}

}  // namespace

std::vector<int> canonicalize(std::span<const int> row) {
  const std::size_t m = row.size();
  std::vector<int> best(row.begin(), row.end());
  std::vector<int> candidate(m);
  for (int sign : {1, -1})
    for (std::size_t s = 0; s < m; ++s) {
      for (std::size_t k = 0; k < m; ++k) candidate[k] = sign * row[(k + s) % m];
      if (row_less(candidate, best)) best = candidate;
    }
  return best;
}

SearchResult search_serial(const SearchConfig& config) {
  check_feasible(config);
  if (auto decided = detail::decided_without_enumeration(config)) return *decided;

  const auto t0 = std::chrono::steady_clock::now();
  const std::size_t m = config.order;
  const auto admissible = admissible_negative_counts(m);
  const bool balance_on = config.filters.balance && detail::balance_applicable(m);
  const auto natural = Listing::natural(cyclic_group(m));

  auto gram_verdict = [&](const std::vector<int>& row) {
    return is_hadamard(rg_sign_matrix(circulant_from_row(row), natural)).is_hadamard;
  };

  detail::Tally t;
  const bits::Mask end = bits::Mask{1} << (m - 1);
  for (bits::Mask x = 0; x < end; ++x) {
    const std::vector<int> row = bits::mask_to_row(x, m);
    ++t.considered;
    const bool flat = paf_is_flat(paf(row));
    if (detail::crosscheck_sampled(x, m, config.gram_crosscheck)) {
      ++t.checked;
      if (flat != gram_verdict(row)) ++t.mismatches;
    }
    if (config.filters.row_sum) {
      const auto negatives = static_cast<std::size_t>(std::count(row.begin(), row.end(), -1));
      if (!admissible.count(negatives)) continue;
    }
    ++t.row_sum;
    if (balance_on && !conditions_report(block_system(row)).balance_ok) continue;
    ++t.balance;
    if (config.filters.paf_prefix && !prefix_bound_survives(row)) continue;
    ++t.paf_prefix;
    if (!(config.final_check == FinalCheck::Paf ? flat : gram_verdict(row))) continue;
    ++t.final;
    if (config.canonicalization == Canonicalization::RotationNegation) {
      t.found.push_back(bits::row_to_mask(canonicalize(row)));
    } else {
      std::vector<int> neg(row);
      for (int& v : neg) v = -v;
      t.found.push_back(bits::row_to_mask(row));
      t.found.push_back(bits::row_to_mask(neg));
    }
  }
  const double enumerate_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  const std::size_t p = detail::effective_prefix_bits(config);
  SearchResult r = detail::finish(config, t, std::size_t{1} << (p - 1));
  r.enumerate_ms = enumerate_ms;
  return r;
}

}  // namespace grh
