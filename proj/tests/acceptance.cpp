// Acceptance run: one PASS/FAIL line per criterion, each checked against its time limit.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>

#include "grh/blocks.hpp"
#include "grh/constructions.hpp"
#include "grh/group_ring.hpp"
#include "grh/hadamard.hpp"
#include "grh/io.hpp"
#include "grh/search.hpp"

using namespace grh;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

int failures = 0;

void criterion(const char* id, const char* title, double limit_ms, const std::function<void(Outcome&)>& body) {
  Outcome out;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.require(false, std::string("exception: ") + e.what());
  }
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  if (out.ok && ms > limit_ms) out.require(false, "took " + std::to_string(ms) + " ms");
  if (!out.ok) ++failures;
  std::printf("%s %s: %s [%.3f ms, limit %.0f ms]%s%s\n", id, out.ok ? "PASS" : "FAIL", title, ms, limit_ms,
              out.ok ? "" : " -- ", out.detail.c_str());
  std::fflush(stdout);
}

std::vector<int> row_of(std::uint64_t bits, std::size_t m) {
  std::vector<int> row(m);
  for (std::size_t k = 0; k < m; ++k) row[k] = ((bits >> k) & 1) ? -1 : 1;
  return row;
}

bool is_perfect_square(std::size_t m) {
  std::size_t r = 0;
  while (r * r < m) ++r;
  return r * r == m;
}

}  // namespace

int main() {
  criterion("AC1", "4x4 circulant round trip and blocked relisting", 1.0, [](Outcome& o) {
    auto c4 = cyclic_group(4);
    const auto w = GroupRingElement::signs(c4, {1, 1, 1, -1});
    const auto m = rg_matrix(w, Listing::natural(c4));
    const auto expect = SignMatrix::from_rows({{1, 1, 1, -1}, {-1, 1, 1, 1}, {1, -1, 1, 1}, {1, 1, -1, 1}});
    o.require(SignMatrix(m) == expect, "natural-listing matrix differs");
    o.require(is_hadamard(m).is_hadamard, "not Hadamard");
    const auto blocked = SignMatrix::from_rows({{1, 1, 1, -1}, {1, 1, -1, 1}, {-1, 1, 1, 1}, {1, -1, 1, 1}});
    o.require(relist(SignMatrix(m), Listing::natural(c4), Listing(c4, {0, 2, 1, 3})) == blocked,
              "relisting to [0,2,1,3] differs from the blocked display");
    o.require(SignMatrix(rg_matrix(w, Listing(c4, {0, 2, 1, 3}))) == blocked, "rg_matrix under [0,2,1,3] differs");
  });

  criterion("AC2", "admissible negative counts and 16x16 display counts", 1000.0, [](Outcome& o) {
    o.require(admissible_negative_counts(4) == std::set<std::size_t>{1, 3}, "m = 4");
    o.require(admissible_negative_counts(16) == std::set<std::size_t>{6, 10}, "m = 16");
    for (std::size_t m = 1; m <= 100; ++m)
      if (!is_perfect_square(m)) o.require(admissible_negative_counts(m).empty(), "non-square m = " + std::to_string(m));
    for (const auto& c : {c2c8_matrix(), quaternion_c2_matrix()}) {
      const auto rep = is_hadamard(c.matrix);
      for (auto v : rep.row_negatives) o.require(v == 6, c.name + " row negatives");
      for (auto v : rep.column_negatives) o.require(v == 6, c.name + " column negatives");
    }
  });

  criterion("AC3", "order-4 census: 8 rows, 1 class", 1000.0, [](Outcome& o) {
    SearchConfig c;
    c.order = 4;
    c.filters = SearchFilters::none();
    c.final_check = FinalCheck::Gram;
    c.canonicalization = Canonicalization::None;
    const auto raw = search(c);
    o.require(raw.found_raw == 8 && raw.found.size() == 8, "raw count " + std::to_string(raw.found_raw));
    for (const auto& row : raw.found_rows()) {
      const auto neg = static_cast<std::size_t>(std::count(row.begin(), row.end(), -1));
      o.require(neg == 1 || neg == 3, "negative count " + std::to_string(neg));
    }
    c.canonicalization = Canonicalization::RotationNegation;
    const auto classes = search(c);
    o.require(classes.found.size() == 1, "classes " + std::to_string(classes.found.size()));
  });

  criterion("AC4", "no circulant Hadamard rows for m in {8,12,16,20,24,28}", 60000.0, [](Outcome& o) {
    for (std::size_t m : {8, 12, 16, 20, 24, 28}) {
      SearchConfig c;
      c.order = m;
      const auto r = search(c);
      o.require(r.found.empty() && r.found_raw == 0, "found rows at m = " + std::to_string(m));
      if (!is_perfect_square(m))
        o.require(r.stage("row_sum").survivors == 0, "row_sum survivors at m = " + std::to_string(m));
      if (m == 16) {
        SearchConfig sweep = c;
        sweep.filters = SearchFilters::none();
        sweep.final_check = FinalCheck::Gram;
        const auto s = search(sweep);
        o.require(s.considered == (1u << 16), "sweep did not cover 2^16 rows");
        o.require(s.stage("final").survivors == 0 && s.found == r.found, "sweep and pipeline disagree");
      }
    }
  });

  criterion("AC5", "filter soundness, exhaustive at m in {4,8,12,16}", 60000.0, [](Outcome& o) {
    for (std::size_t m : {4, 8, 12, 16}) {
      const auto cyc = Listing::natural(cyclic_group(m));
      const auto paired = paired_listing(m);
      std::size_t paf_mismatch = 0, balance_mismatch = 0;
      for (std::uint64_t b = 0; b < (std::uint64_t{1} << m); ++b) {
        const auto row = row_of(b, m);
        const auto w = circulant_from_row(row);
        if (paf_is_flat(paf(row)) != is_hadamard(rg_sign_matrix(w, cyc)).is_hadamard) ++paf_mismatch;
        const auto pm = rg_sign_matrix(w, paired);
        long dot = 0;
        for (std::size_t k = 0; k < m; ++k) dot += pm(0, k) * pm(1, k);
        if ((dot == 0) != conditions_report(block_system(row)).balance_ok) ++balance_mismatch;
      }
      o.require(paf_mismatch == 0, "paf/gram mismatches at m = " + std::to_string(m));
      o.require(balance_mismatch == 0, "balance/orthogonality mismatches at m = " + std::to_string(m));
    }
  });

  criterion("AC6", "block reconstruction", 10000.0, [](Outcome& o) {
    auto same = [](const std::vector<int>& row) {
      return assemble_block_matrix(block_system(row)) ==
             rg_sign_matrix(circulant_from_row(row), paired_listing(row.size()));
    };
    for (std::uint64_t b = 0; b < 256; ++b) o.require(same(row_of(b, 8)), "m = 8 row " + std::to_string(b));
    std::mt19937_64 rng(2024);
    for (std::size_t m : {16, 24})
      for (int t = 0; t < 500; ++t) o.require(same(row_of(rng(), m)), "random row at m = " + std::to_string(m));
  });

  criterion("AC7", "16x16 constructions and listing recovery", 30000.0, [](Outcome& o) {
    for (const auto& c : {c2c2_matrix(), c2c8_matrix(), quaternion_c2_matrix()}) {
      o.require(is_hadamard(c.matrix).is_hadamard, c.name + " not Hadamard");
      o.require(is_regular(c.matrix), c.name + " not regular");
      const auto l = recover_listing(c.matrix, c.group);
      o.require(l.has_value() && is_rg_matrix(c.matrix, *l), c.name + " listing not recovered");
    }
    o.require(!recover_listing(c2c8_matrix().matrix, cyclic_group(16)).has_value(), "C2xC8 display recovered over C16");
  });

  criterion("AC8", "Kronecker extensions", 10000.0, [](Outcome& o) {
    const auto c4 = circulant_c4();
    const auto c2c8 = c2c8_matrix();
    const auto products = {kronecker_extend(c2c8, c4), extend_times(c2c8, c4, 2),
                           kronecker_extend(quaternion_c2_matrix(), c2c2_matrix())};
    const std::size_t sizes[] = {64, 256, 64};
    std::size_t k = 0;
    for (const auto& p : products) {
      o.require(p.matrix.size() == sizes[k++], p.name + " has the wrong size");
      o.require(is_hadamard(p.matrix).is_hadamard, p.name + " not Hadamard");
      o.require(p.listing && is_rg_matrix(p.matrix, *p.listing), p.name + " not an RG-matrix under its listing");
    }
  });

  criterion("AC9", "n = 4: no perfect matching for four symmetric odd blocks", 30000.0, [](Outcome& o) {
    std::size_t cases = 0;
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = i + 1; j < 4; ++j)
        for (unsigned signs = 0; signs < 256; ++signs) {
          std::vector<int> row(16);
          for (std::size_t k = 0; k < 8; ++k) {
            const bool odd = k % 4 == i || k % 4 == j;
            const int s = (signs >> k) & 1 ? -1 : 1;
            row[k] = s;
            row[8 + k] = odd ? -s : s;
          }
          const auto sys = block_system(row);
          o.require(sys.indices_of(BlockKind::Odd).size() == 4 && conditions_report(sys).odd.all_symmetric,
                    "bad configuration");
          o.require(!matching_report(sys, BlockKind::Odd).perfect_matching_found,
                    "perfect matching at i=" + std::to_string(i) + " j=" + std::to_string(j));
          ++cases;
        }
    o.require(cases == 6 * 256, "case count");
  });

  criterion("AC10", "m = 16 result identical for 1, 2 and 8 workers", 60000.0, [](Outcome& o) {
    SearchConfig c;
    c.order = 16;
    c.gram_crosscheck = 0.05;
    c.workers = 1;
    const auto base = search(c);
    const auto base_json = emit_report(base, Format::Json);
    for (int w : {2, 8}) {
      c.workers = w;
      const auto r = search(c);
      o.require(same_outcome(r, base) && r.stages == base.stages, "outcome differs at " + std::to_string(w) + " workers");
      o.require(emit_report(r, Format::Json) == base_json, "report differs at " + std::to_string(w) + " workers");
    }
  });

  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
