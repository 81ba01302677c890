#include <random>

#include "doctest.h"
#include "grh/error.hpp"
#include "grh/group_ring.hpp"
#include "grh/hadamard.hpp"
#include "oracles.hpp"

using namespace grh;

namespace {
const SignMatrix kCirc4 = SignMatrix::from_rows({{1, 1, 1, -1}, {-1, 1, 1, 1}, {1, -1, 1, 1}, {1, 1, -1, 1}});
}

TEST_CASE("gram") {
  CHECK(gram(kCirc4) == [] {
    IntMatrix m = IntMatrix::identity(4);
    for (std::size_t k = 0; k < 4; ++k) m(k, k) = 4;
    return m;
  }());
  IntMatrix twos(2, 2);
  CHECK(gram(SignMatrix::all_ones(2)) == twos);

  std::mt19937_64 rng(1);
  for (std::size_t n : {1, 5, 17, 70, 130}) {
    std::vector<std::vector<int>> rows(n);
    for (auto& r : rows) r = oracle::random_signs(rng, n);
    const auto m = SignMatrix::from_rows(rows);
    const auto g = gram(m);
    CHECK(g == gram_serial(m));
    CHECK(g == m.to_int() * m.to_int().transpose());
    CHECK(g == g.transpose());
    for (std::size_t k = 0; k < n; ++k) CHECK(g(k, k) == static_cast<std::int64_t>(n));
  }
}

TEST_CASE("is_hadamard") {
  auto r = is_hadamard(kCirc4);
  CHECK(r.is_hadamard);
  CHECK(r.order == 4);
  CHECK(r.max_off_diagonal == 0);
  for (auto v : r.row_negatives) CHECK(v == 1);

  auto ones = is_hadamard(SignMatrix::all_ones(4));
  CHECK_FALSE(ones.is_hadamard);
  CHECK(ones.max_off_diagonal == 4);

  const std::vector<std::uint32_t> swap23{0, 2, 1, 3};
  CHECK(is_hadamard(kCirc4.rows_permuted(swap23)).is_hadamard);
  CHECK(is_hadamard(kCirc4.negated()).is_hadamard);
  CHECK(is_hadamard(kCirc4.permuted(swap23)).is_hadamard);
  CHECK(is_hadamard(kCirc4.transpose()).is_hadamard);

  IntMatrix bad(2, 1);
  bad(0, 1) = 0;
  CHECK_THROWS_AS(is_hadamard(bad), Error);
}

TEST_CASE("paf") {
  const std::vector<int> circ4{1, 1, 1, -1};
  CHECK(paf(circ4) == std::vector<std::int64_t>{4, 0, 0, 0});
  const std::vector<int> ones{1, 1, 1, 1};
  CHECK(paf(ones) == std::vector<std::int64_t>{4, 4, 4, 4});
}

TEST_CASE("flat autocorrelation matches the gram oracle for every row at m = 12") {
  const std::size_t m = 12;
  const auto nat = Listing::natural(cyclic_group(m));
  int mismatches = 0;
  for (std::uint64_t b = 0; b < (1u << m); ++b) {
    auto row = oracle::row_from_bits(b, m);
    const bool flat = paf_is_flat(paf(row));
    const bool had = is_hadamard(rg_sign_matrix(circulant_from_row(row), nat)).is_hadamard;
    if (flat != had) ++mismatches;
  }
  CHECK(mismatches == 0);
}

TEST_CASE("gram rows of a circulant are shifts of the autocorrelation") {
  for (std::size_t m = 1; m <= 10; ++m) {
    const auto nat = Listing::natural(cyclic_group(m));
    for (std::uint64_t b = 0; b < (1u << m); ++b) {
      auto row = oracle::row_from_bits(b, m);
      const auto p = paf(row);
      const auto g = gram(rg_sign_matrix(circulant_from_row(row), nat));
      bool ok = true;
      for (std::size_t r = 0; r < m; ++r)
        for (std::size_t c = 0; c < m; ++c)
          if (g(r, c) != p[(c + m - r) % m]) ok = false;
      CHECK(ok);
    }
  }
}

TEST_CASE("integer square root") {
  for (std::uint64_t x = 0; x < 5000; ++x) {
    const auto r = isqrt(x);
    CHECK(r * r <= x);
    CHECK((r + 1) * (r + 1) > x);
  }
  CHECK(isqrt(~std::uint64_t{0}) == 0xFFFFFFFFULL);
  CHECK(isqrt(std::uint64_t{1} << 62) == (std::uint64_t{1} << 31));
}

TEST_CASE("admissible negative counts") {
  CHECK(admissible_negative_counts(4) == std::set<std::size_t>{1, 3});
  CHECK(admissible_negative_counts(16) == std::set<std::size_t>{6, 10});
  CHECK(admissible_negative_counts(12).empty());
  CHECK(admissible_negative_counts(1) == std::set<std::size_t>{0, 1});
  CHECK(admissible_negative_counts(36) == std::set<std::size_t>{15, 21});
  // m = 4n gives {2n - sqrt n, 2n + sqrt n}
  for (std::size_t n = 1; n <= 25; ++n) {
    const auto s = admissible_negative_counts(4 * n);
    const auto root = isqrt(n);
    if (root * root == n) {
      CHECK(s == std::set<std::size_t>{2 * n - root, 2 * n + root});
    } else {
      CHECK(s.empty());
    }
  }
}

TEST_CASE("is_regular") {
  CHECK(is_regular(kCirc4));
  CHECK_FALSE(is_regular(SignMatrix::from_rows({{1, 1}, {1, -1}})));
  CHECK(is_regular(SignMatrix::all_ones(3)));
}
