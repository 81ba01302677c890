#include <filesystem>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "doctest.h"
#include "grh/blocks.hpp"
#include "grh/error.hpp"
#include "grh/hadamard.hpp"
#include "grh/search.hpp"
#include "oracles.hpp"

using namespace grh;

namespace {

SearchConfig config_for(std::size_t m) {
  SearchConfig c;
  c.order = m;
  return c;
}

// Brute force over every row with the row-orthogonality oracle on the explicit circulant.
std::set<std::vector<int>> brute_force_rows(std::size_t m) {
  std::set<std::vector<int>> out;
  for (std::uint64_t b = 0; b < (1u << m); ++b) {
    auto row = oracle::row_from_bits(b, m);
    if (oracle::rows_orthogonal(oracle::circulant(row))) out.insert(row);
  }
  return out;
}

std::vector<int> orbit_min(const std::vector<int>& row) {
  std::vector<int> best = row;
  const std::size_t m = row.size();
  for (int sgn : {1, -1})
    for (std::size_t s = 0; s < m; ++s) {
      std::vector<int> r(m);
      for (std::size_t k = 0; k < m; ++k) r[k] = sgn * row[(k + s) % m];
      // + sorts before -
      if (std::lexicographical_compare(r.begin(), r.end(), best.begin(), best.end(),
                                       [](int a, int b) { return a > b; }))
        best = r;
    }
  return best;
}

int error_kind(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return static_cast<int>(e.kind());
  }
  return -1;
}

std::filesystem::path temp_file(const std::string& name) {
  auto p = std::filesystem::temp_directory_path() / ("grh_test_" + name + "_" + std::to_string(std::random_device{}()));
  std::filesystem::remove(p);
  return p;
}

}  // namespace

TEST_CASE("bit helpers") {
  const std::vector<int> row{1, 1, 1, -1};
  CHECK(bits::row_to_mask(row) == 0b0001);
  CHECK(bits::mask_to_row(0b0001, 4) == row);
  CHECK(bits::to_string(0b0001, 4) == "+++-");
  CHECK(bits::rotate(0b0001, 4, 1) == 0b0010);

  std::mt19937_64 rng(5);
  for (int t = 0; t < 500; ++t) {
    const std::size_t m = 1 + rng() % 40;
    const auto r = oracle::random_signs(rng, m);
    const auto mask = bits::row_to_mask(r);
    CHECK(bits::mask_to_row(mask, m) == r);
    const auto p = paf(r);
    for (std::size_t s = 0; s < m; ++s) {
      CHECK(bits::paf_at(mask, m, s) == p[s]);
      std::vector<int> rot(m);
      for (std::size_t k = 0; k < m; ++k) rot[k] = r[(k + s) % m];
      CHECK(bits::rotate(mask, m, s) == bits::row_to_mask(rot));
    }
    CHECK(bits::paf_flat(mask, m) == paf_is_flat(p));
    if (m % 4 == 0) CHECK(bits::odd_block_count(mask, m) == block_system(r).indices_of(BlockKind::Odd).size());
  }
  CHECK_THROWS_AS(bits::row_to_mask(std::vector<int>(64, 1)), Error);
}

TEST_CASE("canonicalize") {
  const std::vector<int> circ4{1, 1, 1, -1};
  std::set<std::vector<int>> images;
  for (int sgn : {1, -1})
    for (std::size_t s = 0; s < 4; ++s) {
      std::vector<int> r(4);
      for (std::size_t k = 0; k < 4; ++k) r[k] = sgn * circ4[(k + s) % 4];
      images.insert(canonicalize(r));
    }
  CHECK(images.size() == 1);
  CHECK(*images.begin() == circ4);

  CHECK(canonicalize(std::vector<int>(5, 1)) == std::vector<int>(5, 1));
  CHECK(canonicalize(std::vector<int>(5, -1)) == std::vector<int>(5, 1));

  std::mt19937_64 rng(9);
  for (int t = 0; t < 300; ++t) {
    const std::size_t m = 1 + rng() % 20;
    const auto r = oracle::random_signs(rng, m);
    const auto c = canonicalize(r);
    CHECK(canonicalize(c) == c);
    CHECK(c == orbit_min(r));
    CHECK(canonical_mask(bits::row_to_mask(r), m) == bits::row_to_mask(c));
  }
}

TEST_CASE("order 4 census") {
  const auto r = search(config_for(4));
  CHECK(r.considered == 16);
  CHECK(r.found_raw == 8);
  REQUIRE(r.found.size() == 1);
  CHECK(r.found_rows()[0] == std::vector<int>{1, 1, 1, -1});
  CHECK(r.stage("final").survivors == 8);

  auto raw = config_for(4);
  raw.canonicalization = Canonicalization::None;
  const auto rr = search(raw);
  const auto rows = rr.found_rows();
  CHECK(std::set<std::vector<int>>(rows.begin(), rows.end()) == brute_force_rows(4));
  CHECK(rows.size() == 8);
  CHECK(std::is_sorted(rr.found.begin(), rr.found.end()));
  for (const auto& row : rows) {
    const auto neg = static_cast<std::size_t>(std::count(row.begin(), row.end(), -1));
    CHECK(admissible_negative_counts(4).count(neg) == 1);
  }
}

TEST_CASE("small orders agree with brute force, filtered and unfiltered") {
  for (std::size_t m = 1; m <= 16; ++m) {
    const auto expect = brute_force_rows(m);
    for (bool filtered : {true, false}) {
      auto c = config_for(m);
      c.canonicalization = Canonicalization::None;
      if (!filtered) {
        c.filters = SearchFilters::none();
        c.final_check = FinalCheck::Gram;
      }
      const auto r = search(c);
      const auto rows = r.found_rows();
      CHECK_MESSAGE(std::set<std::vector<int>>(rows.begin(), rows.end()) == expect, "m = " << m);
      CHECK(r.considered == (std::uint64_t{1} << m));
      std::uint64_t prev = r.considered;
      for (const auto& s : r.stages) {
        CHECK(s.survivors <= prev);
        prev = s.survivors;
      }
    }
  }
}

TEST_CASE("non-square orders die at the row_sum stage") {
  for (std::size_t m : {8, 12, 20, 24}) {
    const auto r = search(config_for(m));
    CHECK(r.stage("row_sum").survivors == 0);
    CHECK(r.found.empty());
  }
  const auto r16 = search(config_for(16));
  CHECK(r16.found.empty());
  CHECK(r16.stage("row_sum").survivors > 0);
  CHECK(r16.stage("balance").survivors <= r16.stage("row_sum").survivors);
}

TEST_CASE("serial reference matches the parallel search") {
  for (std::size_t m : {4, 8, 9, 12, 16}) {
    for (int variant = 0; variant < 4; ++variant) {
      auto c = config_for(m);
      if (variant == 1) c.filters = SearchFilters::none();
      if (variant == 2) c.filters.paf_prefix = false;
      if (variant == 3) {
        c.final_check = FinalCheck::Gram;
        c.canonicalization = Canonicalization::None;
        c.gram_crosscheck = 0.25;
      }
      const auto a = search(c);
      const auto b = search_serial(c);
      CHECK_MESSAGE(same_outcome(a, b), "m = " << m << " variant " << variant);
    }
  }
}

TEST_CASE("worker count and partition depth do not change the result") {
  auto c = config_for(16);
  c.gram_crosscheck = 0.01;
  c.workers = 1;
  const auto base = search(c);
  for (int w : {2, 8}) {
    c.workers = w;
    CHECK(same_outcome(search(c), base));
  }
  for (std::size_t p : {1, 4, 12, 16}) {
    c.prefix_bits = p;
    c.workers = 3;
    const auto r = search(c);
    CHECK(same_outcome(r, base));
    CHECK(r.partitions == (std::size_t{1} << (p - 1)));
  }
}

TEST_CASE("gram cross-check") {
  auto c = config_for(12);
  c.filters = SearchFilters::none();
  c.gram_crosscheck = 1.0;
  const auto r = search(c);
  CHECK(r.crosscheck_checked == (std::uint64_t{1} << 11));
  CHECK(r.crosscheck_mismatches == 0);
  c.gram_crosscheck = 0.0;
  CHECK(search(c).crosscheck_checked == 0);
}

TEST_CASE("capacity and configuration errors") {
  const int cap = static_cast<int>(ErrorKind::Capacity);
  CHECK(error_kind([] { search(config_for(0)); }) == static_cast<int>(ErrorKind::InvalidOrder));
  CHECK(error_kind([] { search(config_for(64)); }) == cap);
  CHECK(error_kind([] { search(config_for(36)); }) == cap);
  CHECK(error_kind([] {
          auto c = config_for(30);
          c.filters = SearchFilters::none();
          search(c);
        }) == cap);
  CHECK(error_kind([] {
          auto c = config_for(8);
          c.gram_crosscheck = 1.5;
          search(c);
        }) == static_cast<int>(ErrorKind::Precondition));
  CHECK(error_kind([] {
          auto c = config_for(8);
          c.prefix_bits = 9;
          search(c);
        }) == static_cast<int>(ErrorKind::Precondition));

  // non-square orders above the raw bound are settled by the row_sum filter alone
  const auto r = search(config_for(40));
  CHECK(r.found.empty());
  CHECK(r.stage("row_sum").survivors == 0);
  CHECK(r.considered == (std::uint64_t{1} << 40));
}

TEST_CASE("checkpoint resume") {
  const auto path = temp_file("ckpt");
  auto c = config_for(16);
  c.prefix_bits = 6;
  c.checkpoint = path;
  const auto full = search(c);
  CHECK(full.resumed_partitions == 0);

  std::vector<std::string> lines;
  {
    std::ifstream in(path);
    for (std::string l; std::getline(in, l);) lines.push_back(l);
  }
  REQUIRE(lines.size() == 1 + 32);
  CHECK(lines[0].rfind("# grh-search order=16", 0) == 0);
  for (std::size_t k = 1; k < lines.size(); ++k) CHECK(lines[k].rfind("prefix=", 0) == 0);

  // keep the header, ten full lines and one minimal line
  {
    std::ofstream out(path, std::ios::trunc);
    for (std::size_t k = 0; k <= 10; ++k) out << lines[k] << '\n';
    const auto sp = lines[11].find(" considered=");
    out << lines[11].substr(0, sp) << '\n';
  }
  const auto resumed = search(c);
  CHECK(resumed.resumed_partitions == 10);
  CHECK(same_outcome(resumed, full));

  // a checkpoint for another configuration is refused
  auto other = c;
  other.filters.balance = false;
  CHECK_THROWS_AS(search(other), FormatError);

  {
    std::ofstream out(path, std::ios::trunc);
    out << lines[0] << "\nprefix=zz survivors=1 considered=1 row_sum=1 balance=1 paf_prefix=1 checked=0 mismatches=0 found=-\n";
  }
  try {
    search(c);
    CHECK(false);
  } catch (const FormatError& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
  std::filesystem::remove(path);
}
