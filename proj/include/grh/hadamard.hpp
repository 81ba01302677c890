#pragma once

#include <cstdint>
#include <set>
#include <span>
#include <vector>

#include "grh/matrix.hpp"

namespace grh {

struct GramReport {
  std::size_t order = 0;
  std::set<std::int64_t> diagonal_values;
  std::int64_t max_off_diagonal = 0;
  bool is_hadamard = false;
  std::vector<std::int64_t> row_sums;
  std::vector<std::int64_t> column_sums;
  std::vector<std::size_t> row_negatives;
  std::vector<std::size_t> column_negatives;
};

/// M * M^T over exact integers. Rows are distributed over OpenMP threads.
IntMatrix gram(const SignMatrix& m);
/// Single-threaded reference for gram().
IntMatrix gram_serial(const SignMatrix& m);

GramReport is_hadamard(const SignMatrix& m);
/// Integer-matrix entry point; throws Error(Domain) on entries other than +1/-1.
GramReport is_hadamard(const IntMatrix& m);

/// Periodic autocorrelation: paf[s] = sum_k row[k] * row[(k+s) mod m].
std::vector<std::int64_t> paf(std::span<const int> row);
bool paf_is_flat(std::span<const std::int64_t> values);

/// floor(sqrt(x)) computed in integers.
std::uint64_t isqrt(std::uint64_t x);

/// Negative counts r allowed in each row and column of an m x m +-1 matrix with orthogonal
/// rows and constant row/column composition: r = (m +- sqrt m) / 2. Empty when m is not a
/// perfect square.
std::set<std::size_t> admissible_negative_counts(std::size_t m);

/// All row sums and all column sums equal one common value.
bool is_regular(const SignMatrix& m);

}  // namespace grh
