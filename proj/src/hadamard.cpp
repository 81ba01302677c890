#include "grh/hadamard.hpp"

#include <algorithm>
#include <cstdlib>

#include "grh/error.hpp"

namespace grh {

namespace {

std::int64_t row_dot(const SignMatrix& m, std::size_t a, std::size_t b) {
  const auto ra = m.row(a);
  const auto rb = m.row(b);
  std::int64_t sum = 0;
  for (std::size_t k = 0; k < ra.size(); ++k) sum += ra[k] * rb[k];
  return sum;
}

}  // namespace

IntMatrix gram_serial(const SignMatrix& m) {
  const std::size_t n = m.size();
  IntMatrix g(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) g(r, c) = row_dot(m, r, c);
  return g;
}

IntMatrix gram(const SignMatrix& m) {
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(m.size());
  IntMatrix g(m.size());
  // Upper triangle per row, mirrored afterwards; rows get shorter so schedule dynamically.
#pragma omp parallel for schedule(dynamic, 4) if (n >= 64)
  for (std::ptrdiff_t r = 0; r < n; ++r)
    for (std::ptrdiff_t c = r; c < n; ++c) g(r, c) = row_dot(m, r, c);
  for (std::ptrdiff_t r = 0; r < n; ++r)
    for (std::ptrdiff_t c = 0; c < r; ++c) g(r, c) = g(c, r);
  return g;
}

GramReport is_hadamard(const SignMatrix& m) {
  const std::size_t n = m.size();
  GramReport report;
  report.order = n;
  report.row_sums.assign(n, 0);
  report.column_sums.assign(n, 0);
  report.row_negatives.assign(n, 0);
  report.column_negatives.assign(n, 0);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      const int v = m(r, c);
      report.row_sums[r] += v;
      report.column_sums[c] += v;
      if (v < 0) {
        ++report.row_negatives[r];
        ++report.column_negatives[c];
      }
    }

  const IntMatrix g = gram(m);
  bool off_zero = true;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      if (r == c) {
        report.diagonal_values.insert(g(r, c));
      } else {
        const std::int64_t a = std::llabs(g(r, c));
        report.max_off_diagonal = std::max(report.max_off_diagonal, a);
        if (a != 0) off_zero = false;
      }
    }
  const bool diag_ok = report.diagonal_values.size() == 1 && *report.diagonal_values.begin() == static_cast<std::int64_t>(n);
  report.is_hadamard = n > 0 && diag_ok && off_zero;
  return report;
}

GramReport is_hadamard(const IntMatrix& m) { return is_hadamard(SignMatrix(m)); }

std::vector<std::int64_t> paf(std::span<const int> row) {
  const std::size_t m = row.size();
  std::vector<std::int64_t> out(m, 0);
  for (std::size_t s = 0; s < m; ++s) {
    std::int64_t sum = 0;
    for (std::size_t k = 0; k < m; ++k) sum += row[k] * row[(k + s) % m];
    out[s] = sum;
  }
  return out;
}

bool paf_is_flat(std::span<const std::int64_t> values) {
  for (std::size_t s = 1; s < values.size(); ++s)
    if (values[s] != 0) return false;
  return true;
}

std::uint64_t isqrt(std::uint64_t x) {
  if (x < 2) return x;
  // Newton iteration from above converges to floor(sqrt(x)).
  std::uint64_t r = x / 2 + 1;
  std::uint64_t next = (r + x / r) / 2;
  while (next < r) {
    r = next;
    next = (r + x / r) / 2;
  }
  return r;
}

std::set<std::size_t> admissible_negative_counts(std::size_t m) {
  if (m == 0) return {};
  const std::uint64_t root = isqrt(m);
  if (root * root != m) return {};
  if ((m - root) % 2 != 0) return {};
  return {static_cast<std::size_t>((m - root) / 2), static_cast<std::size_t>((m + root) / 2)};
}

bool is_regular(const SignMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return true;
  std::int64_t common = 0;
  for (std::size_t c = 0; c < n; ++c) common += m(0, c);
  for (std::size_t r = 0; r < n; ++r) {
    std::int64_t sum = 0;
    for (std::size_t c = 0; c < n; ++c) sum += m(r, c);
    if (sum != common) return false;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::int64_t sum = 0;
    for (std::size_t r = 0; r < n; ++r) sum += m(r, c);
    if (sum != common) return false;
  }
  return true;
}

}  // namespace grh
