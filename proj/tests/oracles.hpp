#pragma once

// Test-only oracles that avoid the library's code paths.

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

namespace oracle {

using Rows = std::vector<std::vector<int>>;

inline Rows circulant(const std::vector<int>& row) {
  const std::size_t m = row.size();
  Rows out(m, std::vector<int>(m));
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < m; ++c) out[r][c] = row[(c + m - r) % m];
  return out;
}

inline bool rows_orthogonal(const Rows& a) {
  const std::size_t m = a.size();
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t s = 0; s < m; ++s) {
      long dot = 0;
      for (std::size_t k = 0; k < m; ++k) dot += a[r][k] * a[s][k];
      if (dot != (r == s ? static_cast<long>(m) : 0)) return false;
    }
  return true;
}

inline std::vector<int> row_from_bits(std::uint64_t bits, std::size_t m) {
  std::vector<int> row(m);
  for (std::size_t k = 0; k < m; ++k) row[k] = ((bits >> k) & 1) ? -1 : 1;
  return row;
}

inline std::vector<int> random_signs(std::mt19937_64& rng, std::size_t m) {
  std::vector<int> row(m);
  for (auto& v : row) v = (rng() & 1) ? 1 : -1;
  return row;
}

struct OrderedPair {
  std::size_t i, j, d;
  int sign;
};

/// Ordered same-kind pairs with difference and sign, computed from raw entries.
inline std::vector<OrderedPair> ordered_pairs(const std::vector<int>& row, bool odd_kind) {
  const std::size_t nb = row.size() / 2;
  std::vector<std::size_t> idx;
  for (std::size_t k = 0; k < nb; ++k)
    if ((row[k] != row[nb + k]) == odd_kind) idx.push_back(k);
  std::vector<OrderedPair> out;
  for (auto a : idx)
    for (auto b : idx) {
      if (a == b) continue;
      int s = row[a] * row[b];  // block sign is the top-left entry
      if (odd_kind && a > b) s = -s;
      out.push_back({a, b, (b + nb - a) % nb, s});
    }
  return out;
}

/// Enumerates every pairing of the ordered pairs and accepts one whose matches all have equal
/// difference and opposite sign and which is closed under taking conjugates.
inline bool brute_force_perfect_matching(const std::vector<OrderedPair>& pairs) {
  const std::size_t n = pairs.size();
  if (n == 0) return true;
  if (n % 2) return false;
  std::vector<int> partner(n, -1);
  auto conj = [&](std::size_t k) {
    for (std::size_t t = 0; t < n; ++t)
      if (pairs[t].i == pairs[k].j && pairs[t].j == pairs[k].i) return t;
    return n;
  };
  std::function<bool()> rec = [&]() -> bool {
    std::size_t p = 0;
    while (p < n && partner[p] >= 0) ++p;
    if (p == n) {
      for (std::size_t k = 0; k < n; ++k)
        if (partner[conj(k)] != static_cast<int>(conj(partner[k]))) return false;
      return true;
    }
    for (std::size_t q = p + 1; q < n; ++q) {
      if (partner[q] >= 0) continue;
      if (pairs[p].d != pairs[q].d || pairs[p].sign == pairs[q].sign) continue;
      partner[p] = static_cast<int>(q);
      partner[q] = static_cast<int>(p);
      if (rec()) return true;
      partner[p] = partner[q] = -1;
    }
    return false;
  };
  return rec();
}

}  // namespace oracle
