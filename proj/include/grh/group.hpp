#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace grh {

using Element = std::uint32_t;

/// Upper bound on group order; tables are order^2 entries.
inline constexpr std::size_t kMaxGroupOrder = 1024;

/// A finite group stored as dense multiplication and inverse tables.
/// Element 0 is always the identity. Immutable once built.
class Group {
 public:
  /// Validates the tables (Latin square, identity at 0, inverses) and throws
  /// Error(Structural) on failure. Associativity is checked separately
  /// because it costs order^3.
  Group(std::string name, std::size_t order, std::vector<Element> mul);

  const std::string& name() const noexcept { return name_; }
  std::size_t order() const noexcept { return order_; }

  Element mul(Element a, Element b) const { return mul_[a * order_ + b]; }
  Element inv(Element a) const { return inv_[a]; }
  static constexpr Element identity() { return 0; }

  /// Smallest k >= 1 with a^k = identity.
  std::size_t element_order(Element a) const;
  bool is_abelian() const;
  /// Exhaustive check; O(order^3).
  bool is_associative() const;

  std::span<const Element> table() const noexcept { return mul_; }

 private:
  std::string name_;
  std::size_t order_;
  std::vector<Element> mul_;
  std::vector<Element> inv_;
};

using GroupPtr = std::shared_ptr<const Group>;

/// C_n with element i standing for g^i.
GroupPtr cyclic_group(std::size_t n);

/// G x H with (i, j) flattened to i*|H| + j.
GroupPtr direct_product(const GroupPtr& g, const GroupPtr& h);

/// Quaternion group Q8. Index layout: 0=1, 1=-1, 2=i, 3=-i, 4=j, 5=-j, 6=k, 7=-k.
GroupPtr quaternion_group();

namespace q8 {
inline constexpr Element one = 0, minus_one = 1, i = 2, minus_i = 3, j = 4, minus_j = 5, k = 6, minus_k = 7;
}

/// Builds a group from a name such as "C4", "C2xC8", "Q8xC2" or "C2xC2xC4".
/// Factors are "C<n>" or "Q8" (alias "H"), combined left to right.
GroupPtr group_by_name(const std::string& name);

/// An ordering of a group's elements; position k of the RG-matrix holds perm[k].
class Listing {
 public:
  Listing(GroupPtr group, std::vector<Element> perm);

  static Listing natural(GroupPtr group);

  const GroupPtr& group() const noexcept { return group_; }
  std::span<const Element> perm() const noexcept { return perm_; }
  std::size_t size() const noexcept { return perm_.size(); }
  Element operator[](std::size_t k) const { return perm_[k]; }

  /// position_of(perm[k]) == k.
  std::vector<std::uint32_t> positions() const;

  /// Same permutation and the same group object (or an identically named group
  /// with an identical table).
  friend bool operator==(const Listing& a, const Listing& b);

 private:
  GroupPtr group_;
  std::vector<Element> perm_;
};

/// The listing {0, 2n, 1, 2n+1, ..., 2n-1, 4n-1} of C_{4n}: position 2k holds
/// g^k and position 2k+1 holds g^(k+2n).
Listing paired_listing(std::size_t m);

/// Lexicographic (A-major) listing of G x H built from listings of each factor.
Listing product_listing(const Listing& a, const Listing& b, GroupPtr product);

}  // namespace grh
