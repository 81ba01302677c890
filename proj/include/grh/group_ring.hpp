#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "grh/group.hpp"
#include "grh/matrix.hpp"

namespace grh {

/// True when both refer to the same group table (pointer or table equality).
bool same_group(const Group& a, const Group& b);

/// w = sum of coeffs[x] * x over the elements x of a group, with integer coefficients.
class GroupRingElement {
 public:
  GroupRingElement(GroupPtr group, std::vector<std::int64_t> coeffs);

  /// Variant for Hadamard candidates; throws Error(Domain) unless every coefficient is +1 or -1.
  static GroupRingElement signs(GroupPtr group, std::vector<std::int64_t> coeffs);
  /// The unit element 1 = 1*identity.
  static GroupRingElement one(GroupPtr group);

  const GroupPtr& group() const noexcept { return group_; }
  std::span<const std::int64_t> coeffs() const noexcept { return coeffs_; }
  std::int64_t coeff(Element x) const { return coeffs_[x]; }
  bool is_sign_element() const;

  /// Convolution product in the group ring.
  GroupRingElement operator*(const GroupRingElement& rhs) const;

  friend bool operator==(const GroupRingElement& a, const GroupRingElement& b) {
    return same_group(*a.group_, *b.group_) && a.coeffs_ == b.coeffs_;
  }

 private:
  GroupPtr group_;
  std::vector<std::int64_t> coeffs_;
};

/// Entry (r, c) is the coefficient of perm[r]^-1 * perm[c].
IntMatrix rg_matrix(const GroupRingElement& w, const Listing& listing);

/// rg_matrix for sign elements, with provenance attached.
SignMatrix rg_sign_matrix(const GroupRingElement& w, const Listing& listing);

/// w = sum row[i] g^i in C_m; its natural-listing RG-matrix is the circulant with first row `row`.
GroupRingElement circulant_from_row(std::span<const int> row);

/// Re-expresses an RG-matrix built under `from` in the listing `to`.
SignMatrix relist(const SignMatrix& m, const Listing& from, const Listing& to);

/// True iff every entry (r, c) depends only on perm[r]^-1 * perm[c].
bool is_rg_matrix(const IntMatrix& m, const Listing& listing);
bool is_rg_matrix(const SignMatrix& m, const Listing& listing);

/// Reads off the coefficient vector of an RG-matrix, or nullopt if `m` has no RG-structure
/// under `listing`.
std::optional<std::vector<std::int64_t>> rg_coefficients(const IntMatrix& m, const Listing& listing);

/// Finds a listing with perm[0] = identity under which `m` is an RG-matrix of `group`.
/// Positions are assigned left to right, elements tried in increasing index order, so
/// the first listing in that order is returned.
std::optional<Listing> recover_listing(const SignMatrix& m, const GroupPtr& group);

}  // namespace grh
