#include "grh/blocks.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_map>

#include "grh/error.hpp"

namespace grh {

const char* to_string(BlockKind kind) noexcept { return kind == BlockKind::Even ? "even" : "odd"; }

Block2::Block2(int a, int b) : a_(a), b_(b) {
  if ((a != 1 && a != -1) || (b != 1 && b != -1)) throw Error(ErrorKind::Domain, "block entries must be signs");
}

Block2 twist(const Block2& b) { return Block2(b.b(), b.a()); }

std::array<int, 4> block_product(const Block2& x, const Block2& y) {
  std::array<int, 4> out{};
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) out[r * 2 + c] = x(r, 0) * y(0, c) + x(r, 1) * y(1, c);
  return out;
}

std::vector<std::size_t> BlockSystem::indices_of(BlockKind kind) const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < blocks.size(); ++k)
    if (blocks[k].kind() == kind) out.push_back(k);
  return out;
}

BlockSystem block_system(std::span<const int> row) {
  if (row.empty() || row.size() % 4 != 0)
    throw Error(ErrorKind::InvalidOrder, "block system needs a row length divisible by 4, got " + std::to_string(row.size()));
  BlockSystem s;
  const std::size_t half = row.size() / 2;
  s.n = row.size() / 4;
  s.source_row.assign(row.begin(), row.end());
  s.blocks.reserve(half);
  for (std::size_t k = 0; k < half; ++k) s.blocks.emplace_back(row[k], row[half + k]);
  return s;
}

SignMatrix assemble_block_matrix(const BlockSystem& s) {
  const std::size_t nb = s.blocks.size();
  IntMatrix out(2 * nb);
  for (std::size_t J = 0; J < nb; ++J)
    for (std::size_t K = 0; K < nb; ++K) {
      const Block2 b = K >= J ? s.blocks[K - J] : twist(s.blocks[K + nb - J]);
      for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) out(2 * J + r, 2 * K + c) = b(r, c);
    }
  return SignMatrix(out);
}

PairInfo pair_info(const BlockSystem& s, std::size_t i, std::size_t j) {
  const std::size_t nb = s.blocks.size();
  if (i >= nb || j >= nb) throw Error(ErrorKind::Structural, "block index out of range");
  if (i == j) throw Error(ErrorKind::Precondition, "a pair needs two distinct blocks");
  const Block2& bi = s.blocks[i];
  const Block2& bj = s.blocks[j];
  if (bi.kind() != bj.kind())
    throw Error(ErrorKind::KindMismatch, "blocks " + std::to_string(i) + " and " + std::to_string(j) + " differ in kind");
  PairInfo p;
  p.i = i;
  p.j = j;
  p.difference = (j + nb - i) % nb;
  p.conjugate_difference = nb - p.difference;
  p.sign = bi.sign() * bj.sign();
  if (bi.kind() == BlockKind::Odd && i > j) p.sign = -p.sign;
  return p;
}

ConditionsReport conditions_report(const BlockSystem& s) {
  ConditionsReport r;
  r.n = s.n;
  const std::size_t nb = s.blocks.size();
  r.symmetric.resize(nb);
  r.partner.resize(nb);
  for (std::size_t k = 0; k < nb; ++k) {
    if (s.blocks[k].kind() == BlockKind::Even) {
      ++r.even_count;
    } else {
      ++r.odd_count;
    }
    r.symmetric[k] = s.is_symmetric(k);
    if (r.symmetric[k]) r.partner[k] = s.antipode(k);
  }
  r.balance_ok = r.even_count == r.odd_count;

  for (BlockKind kind : {BlockKind::Even, BlockKind::Odd}) {
    KindConditions& kc = kind == BlockKind::Even ? r.even : r.odd;
    kc.indices = s.indices_of(kind);
    for (std::size_t a : kc.indices) {
      if (!r.symmetric[a]) kc.all_symmetric = false;
      for (std::size_t b : kc.indices)
        if (a != b) ++kc.differences[(b + nb - a) % nb];
    }
    for (const auto& [d, count] : kc.differences)
      if (count % 2 != 0) kc.differences_even = false;
  }
  return r;
}

namespace {

// Perfect-matching search over one conjugation-closed set of ordered pairs.
class ComponentMatcher {
 public:
  ComponentMatcher(const std::vector<PairInfo>& pairs, std::vector<std::size_t> members,
                   const std::vector<std::size_t>& conj_of)
      : pairs_(pairs), members_(std::move(members)), local_(pairs.size(), kNone) {
    for (std::size_t k = 0; k < members_.size(); ++k) local_[members_[k]] = k;
    conj_.resize(members_.size());
    for (std::size_t k = 0; k < members_.size(); ++k) conj_[k] = local_[conj_of[members_[k]]];
  }

  bool perfect(std::vector<std::pair<std::size_t, std::size_t>>& out) {
    failed_.clear();
    std::vector<std::pair<std::size_t, std::size_t>> trail;
    if (!solve(0, trail)) return false;
    for (auto [a, b] : trail) out.emplace_back(members_[a], members_[b]);
    return true;
  }

  /// A pair left unmatched by some maximum conjugation-closed matching.
  std::size_t unmatched_witness() {
    best_.clear();
    best_matched(0);
    std::uint64_t state = 0;
    while (true) {
      const std::size_t p = first_free(state);
      if (p == kNone) break;
      const int target = best_.at(state);
      const std::uint64_t skip = state | bit(p) | bit(conj_[p]);
      if (best_matched(skip) == target) return members_[p];
      bool advanced = false;
      for (std::size_t q : candidates(state, p)) {
        const std::uint64_t next = state | bit(p) | bit(q) | bit(conj_[p]) | bit(conj_[q]);
        const int gain = (conj_[p] == q) ? 2 : 4;
        if (best_matched(next) + gain == target) {
          state = next;
          advanced = true;
          break;
        }
      }
      if (!advanced) return members_[p];
    }
    return members_.front();
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  static std::uint64_t bit(std::size_t k) { return std::uint64_t{1} << k; }

  std::size_t first_free(std::uint64_t state) const {
    for (std::size_t k = 0; k < members_.size(); ++k)
      if (!(state & bit(k))) return k;
    return kNone;
  }

  std::vector<std::size_t> candidates(std::uint64_t state, std::size_t p) const {
    std::vector<std::size_t> out;
    const PairInfo& pp = pairs_[members_[p]];
    for (std::size_t q = 0; q < members_.size(); ++q) {
      if (q == p || (state & bit(q))) continue;
      const PairInfo& qq = pairs_[members_[q]];
      if (qq.difference != pp.difference || qq.sign == pp.sign) continue;
      const std::size_t cp = conj_[p];
      const std::size_t cq = conj_[q];
      if (cp != q) {
        if ((state & bit(cp)) || (state & bit(cq))) continue;
        const PairInfo& a = pairs_[members_[cp]];
        const PairInfo& b = pairs_[members_[cq]];
        if (a.difference != b.difference || a.sign == b.sign) continue;
      }
      out.push_back(q);
    }
    return out;
  }

  bool solve(std::uint64_t state, std::vector<std::pair<std::size_t, std::size_t>>& trail) {
    const std::size_t p = first_free(state);
    if (p == kNone) return true;
    if (failed_.count(state)) return false;
    for (std::size_t q : candidates(state, p)) {
      const std::size_t cp = conj_[p];
      const std::size_t cq = conj_[q];
      const std::uint64_t next = state | bit(p) | bit(q) | bit(cp) | bit(cq);
      const std::size_t mark = trail.size();
      trail.emplace_back(p, q);
      trail.emplace_back(q, p);
      if (cp != q) {
        trail.emplace_back(cp, cq);
        trail.emplace_back(cq, cp);
      }
      if (solve(next, trail)) return true;
      trail.resize(mark);
    }
    failed_.insert({state, true});
    return false;
  }

  int best_matched(std::uint64_t state) {
    const std::size_t p = first_free(state);
    if (p == kNone) return 0;
    if (auto it = best_.find(state); it != best_.end()) return it->second;
    int best = best_matched(state | bit(p) | bit(conj_[p]));
    for (std::size_t q : candidates(state, p)) {
      const std::uint64_t next = state | bit(p) | bit(q) | bit(conj_[p]) | bit(conj_[q]);
      best = std::max(best, best_matched(next) + ((conj_[p] == q) ? 2 : 4));
    }
    best_[state] = best;
    return best;
  }

  const std::vector<PairInfo>& pairs_;
  std::vector<std::size_t> members_;
  std::vector<std::size_t> local_;
  std::vector<std::size_t> conj_;
  std::unordered_map<std::uint64_t, bool> failed_;
  std::unordered_map<std::uint64_t, int> best_;
};

}  // namespace

MatchReport matching_report(const BlockSystem& s, BlockKind kind) {
  const std::size_t nb = s.blocks.size();
  if (nb > kMaxMatchingBlocks)
    throw Error(ErrorKind::Capacity, "matching_report supports at most " + std::to_string(kMaxMatchingBlocks) + " blocks");
  MatchReport report;
  report.kind = kind;

  const auto idx = s.indices_of(kind);
  std::vector<PairInfo> pairs;
  std::vector<std::vector<std::size_t>> slot(nb, std::vector<std::size_t>(nb, 0));
  for (std::size_t a : idx)
    for (std::size_t b : idx)
      if (a != b) {
        slot[a][b] = pairs.size();
        pairs.push_back(pair_info(s, a, b));
      }
  report.pair_count = pairs.size();
  std::vector<std::size_t> conj(pairs.size());
  for (std::size_t k = 0; k < pairs.size(); ++k) conj[k] = slot[pairs[k].j][pairs[k].i];

  // Pairs at difference d only interact with their conjugates at 2n - d.
  std::vector<std::vector<std::size_t>> components;
  for (std::size_t d = 1; d <= nb / 2; ++d) {
    std::vector<std::size_t> members;
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if (pairs[k].difference == d || pairs[k].difference == nb - d) members.push_back(k);
    if (!members.empty()) components.push_back(std::move(members));
  }

  std::vector<std::pair<std::size_t, std::size_t>> matched;
  report.perfect_matching_found = true;
  for (const auto& members : components) {
    ComponentMatcher matcher(pairs, members, conj);
    if (!matcher.perfect(matched)) {
      report.perfect_matching_found = false;
      if (!report.unmatched) report.unmatched = pairs[matcher.unmatched_witness()];
    }
  }
  if (report.perfect_matching_found) {
    std::sort(matched.begin(), matched.end());
    for (auto [a, b] : matched) report.matching.emplace_back(pairs[a], pairs[b]);
  }
  return report;
}

QuadrupleReport quadruple_remainders(const BlockSystem& s, std::size_t i, std::size_t j) {
  const std::size_t nb = s.blocks.size();
  if (i >= nb || j >= nb) throw Error(ErrorKind::Structural, "block index out of range");
  if (i >= j) throw Error(ErrorKind::Precondition, "quadruple_remainders needs i < j");
  for (std::size_t k : {i, j}) {
    if (s.blocks[k].kind() != BlockKind::Odd)
      throw Error(ErrorKind::Precondition, "block " + std::to_string(k) + " is not odd");
    if (!s.is_symmetric(k)) throw Error(ErrorKind::Precondition, "block " + std::to_string(k) + " is not symmetric");
  }
  const std::size_t ip = s.antipode(i);
  const std::size_t jp = s.antipode(j);
  if (j == ip) throw Error(ErrorKind::Precondition, "j is the partner of i; T(i,j) has only two blocks");

  QuadrupleReport q;
  q.i = i;
  q.j = j;
  q.i_partner = ip;
  q.j_partner = jp;
  auto pi = [&](std::size_t a, std::size_t b) { return pair_info(s, a, b); };
  auto matches = [](const PairInfo& x, const PairInfo& y) { return x.difference == y.difference && x.sign != y.sign; };

  q.direct_pairs_match = matches(pi(i, j), pi(ip, jp));
  q.cross_pairs_match = matches(pi(j, ip), pi(jp, i));
  q.dichotomy_holds = q.direct_pairs_match != q.cross_pairs_match;

  q.matched.emplace_back(pi(i, ip), pi(ip, i));
  q.matched.emplace_back(pi(j, jp), pi(jp, j));
  if (q.direct_pairs_match) {
    q.matched.emplace_back(pi(i, j), pi(ip, jp));
    q.matched.emplace_back(pi(j, i), pi(jp, ip));
    q.remainders = {pi(j, ip), pi(jp, i), pi(ip, j), pi(i, jp)};
  } else {
    if (q.cross_pairs_match) {
      q.matched.emplace_back(pi(j, ip), pi(jp, i));
      q.matched.emplace_back(pi(ip, j), pi(i, jp));
    }
    q.remainders = {pi(i, j), pi(ip, jp), pi(j, i), pi(jp, ip)};
  }
  return q;
}

}  // namespace grh
