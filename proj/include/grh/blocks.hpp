#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "grh/matrix.hpp"

namespace grh {

enum class BlockKind { Even, Odd };

const char* to_string(BlockKind kind) noexcept;

/// A 2x2 sign block [[a, b], [b, a]].
class Block2 {
 public:
  Block2(int a, int b);

  int a() const noexcept { return a_; }
  int b() const noexcept { return b_; }
  int operator()(int r, int c) const { return (r == c) ? a_ : b_; }

  BlockKind kind() const noexcept { return a_ == b_ ? BlockKind::Even : BlockKind::Odd; }
  /// [[+,+],[+,+]] and [[+,-],[-,+]] have sign +1; their negatives have sign -1.
  int sign() const noexcept { return a_; }

  friend bool operator==(const Block2&, const Block2&) = default;

 private:
  int a_;
  int b_;
};

/// Column swap: equals the block itself when even and its negation when odd.
Block2 twist(const Block2& b);

/// 2x2 integer product of two blocks, row-major.
std::array<int, 4> block_product(const Block2& x, const Block2& y);

/// The 2n blocks read off a length-4n first row under the paired listing:
/// block k = [[row[k], row[2n+k]], [row[2n+k], row[k]]].
struct BlockSystem {
  std::size_t n = 0;
  std::vector<Block2> blocks;
  std::vector<int> source_row;

  std::size_t block_count() const noexcept { return blocks.size(); }
  /// Index of the block at difference n from k (k' when both have the same kind).
  std::size_t antipode(std::size_t k) const noexcept { return (k + n) % blocks.size(); }
  bool is_symmetric(std::size_t k) const { return blocks[antipode(k)].kind() == blocks[k].kind(); }
  std::vector<std::size_t> indices_of(BlockKind kind) const;
};

BlockSystem block_system(std::span<const int> row);

/// Block row J, block column K holds B_{K-J} when K >= J and twist(B_{K-J+2n}) otherwise.
SignMatrix assemble_block_matrix(const BlockSystem& s);

struct PairInfo {
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t difference = 0;
  int sign = 0;
  std::size_t conjugate_difference = 0;

  friend bool operator==(const PairInfo&, const PairInfo&) = default;
};

/// Difference (j - i) mod 2n. Even pairs: product of block signs. Odd pairs: product of
/// block signs when i < j, its negation when i > j.
PairInfo pair_info(const BlockSystem& s, std::size_t i, std::size_t j);

struct KindConditions {
  std::vector<std::size_t> indices;
  /// difference -> number of ordered same-kind pairs at that difference
  std::map<std::size_t, std::size_t> differences;
  bool differences_even = true;
  bool all_symmetric = true;
};

struct ConditionsReport {
  std::size_t n = 0;
  std::size_t even_count = 0;
  std::size_t odd_count = 0;
  bool balance_ok = false;
  KindConditions even;
  KindConditions odd;
  std::vector<bool> symmetric;
  /// Same-kind partner at difference n, per block.
  std::vector<std::optional<std::size_t>> partner;
};

ConditionsReport conditions_report(const BlockSystem& s);

struct MatchReport {
  BlockKind kind = BlockKind::Even;
  std::size_t pair_count = 0;
  bool perfect_matching_found = false;
  /// Every ordered pair appears once as .first, so a perfect matching has pair_count entries.
  std::vector<std::pair<PairInfo, PairInfo>> matching;
  /// A pair left unmatched by a maximum matching, when no perfect one exists.
  std::optional<PairInfo> unmatched;
};

/// Largest block count matching_report accepts.
inline constexpr std::size_t kMaxMatchingBlocks = 32;

/// Exact search for a perfect matching of the ordered same-kind pairs, where (i,j) may match
/// (k,l) iff they have equal difference and opposite sign, and matching (i,j) with (k,l)
/// also matches (j,i) with (l,k).
MatchReport matching_report(const BlockSystem& s, BlockKind kind);

struct QuadrupleReport {
  std::size_t i = 0, j = 0, i_partner = 0, j_partner = 0;
  /// True when (i,j) matches (i',j'); the remainders are then (j,i'),(j',i) and conjugates.
  bool direct_pairs_match = false;
  /// True when (j,i') matches (j',i).
  bool cross_pairs_match = false;
  /// Exactly one of the two alternatives above holds.
  bool dichotomy_holds = false;
  std::vector<std::pair<PairInfo, PairInfo>> matched;
  /// Two non-matching pairs of equal difference and sign, followed by their conjugates.
  std::vector<PairInfo> remainders;
};

/// Matches pairs within T(i,j) = {i, j, i', j'} for symmetric odd blocks i < j and reports the
/// unmatched remainders with their conjugates.
QuadrupleReport quadruple_remainders(const BlockSystem& s, std::size_t i, std::size_t j);

}  // namespace grh
