#include "grh/group_ring.hpp"

#include <algorithm>

#include "grh/error.hpp"

namespace grh {

bool same_group(const Group& a, const Group& b) {
  if (&a == &b) return true;
  return a.order() == b.order() && std::equal(a.table().begin(), a.table().end(), b.table().begin());
}

GroupRingElement::GroupRingElement(GroupPtr group, std::vector<std::int64_t> coeffs)
    : group_(std::move(group)), coeffs_(std::move(coeffs)) {
  if (!group_) throw Error(ErrorKind::Structural, "group ring element without a group");
  if (coeffs_.size() != group_->order())
    throw Error(ErrorKind::Structural, "coefficient count " + std::to_string(coeffs_.size()) +
                                           " does not match group order " + std::to_string(group_->order()));
}

GroupRingElement GroupRingElement::signs(GroupPtr group, std::vector<std::int64_t> coeffs) {
  GroupRingElement w(std::move(group), std::move(coeffs));
  if (!w.is_sign_element()) throw Error(ErrorKind::Domain, "coefficients must all be +1 or -1");
  return w;
}

GroupRingElement GroupRingElement::one(GroupPtr group) {
  std::vector<std::int64_t> coeffs(group->order(), 0);
  coeffs[0] = 1;
  return GroupRingElement(std::move(group), std::move(coeffs));
}

bool GroupRingElement::is_sign_element() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](std::int64_t v) { return v == 1 || v == -1; });
}

GroupRingElement GroupRingElement::operator*(const GroupRingElement& rhs) const {
  if (!same_group(*group_, *rhs.group_)) throw Error(ErrorKind::Structural, "group ring product over different groups");
  const std::size_t n = group_->order();
  std::vector<std::int64_t> out(n, 0);
  for (Element x = 0; x < n; ++x) {
    if (coeffs_[x] == 0) continue;
    for (Element y = 0; y < n; ++y) out[group_->mul(x, y)] += coeffs_[x] * rhs.coeffs_[y];
  }
  return GroupRingElement(group_, std::move(out));
}

IntMatrix rg_matrix(const GroupRingElement& w, const Listing& listing) {
  const Group& g = *w.group();
  if (!same_group(g, *listing.group())) throw Error(ErrorKind::Structural, "listing is over a different group");
  const std::size_t n = g.order();
  IntMatrix m(n);
  for (std::size_t r = 0; r < n; ++r) {
    const Element row_inv = g.inv(listing[r]);
    for (std::size_t c = 0; c < n; ++c) m(r, c) = w.coeff(g.mul(row_inv, listing[c]));
  }
  return m;
}

SignMatrix rg_sign_matrix(const GroupRingElement& w, const Listing& listing) {
  SignMatrix m(rg_matrix(w, listing));
  m.set_provenance({listing.group()->name(), {listing.perm().begin(), listing.perm().end()}, "rg_matrix"});
  return m;
}

GroupRingElement circulant_from_row(std::span<const int> row) {
  if (row.empty()) throw Error(ErrorKind::InvalidOrder, "circulant row must be non-empty");
  std::vector<std::int64_t> coeffs(row.begin(), row.end());
  return GroupRingElement::signs(cyclic_group(row.size()), std::move(coeffs));
}

SignMatrix relist(const SignMatrix& m, const Listing& from, const Listing& to) {
  if (from.size() != to.size() || m.size() != from.size())
    throw Error(ErrorKind::Structural, "listing length does not match matrix size");
  if (!same_group(*from.group(), *to.group())) throw Error(ErrorKind::Structural, "listings are over different groups");
  const auto pos = from.positions();
  std::vector<std::uint32_t> perm(to.size());
  for (std::size_t k = 0; k < to.size(); ++k) perm[k] = pos[to[k]];
  SignMatrix out = m.permuted(perm);
  out.set_provenance({to.group()->name(), {to.perm().begin(), to.perm().end()}, "relist"});
  return out;
}

std::optional<std::vector<std::int64_t>> rg_coefficients(const IntMatrix& m, const Listing& listing) {
  const Group& g = *listing.group();
  const std::size_t n = g.order();
  if (m.size() != n) throw Error(ErrorKind::Structural, "matrix size does not match group order");
  std::vector<std::int64_t> coeffs(n, 0);
  std::vector<char> known(n, 0);
  for (std::size_t r = 0; r < n; ++r) {
    const Element row_inv = g.inv(listing[r]);
    for (std::size_t c = 0; c < n; ++c) {
      const Element x = g.mul(row_inv, listing[c]);
      if (!known[x]) {
        known[x] = 1;
        coeffs[x] = m(r, c);
      } else if (coeffs[x] != m(r, c)) {
        return std::nullopt;
      }
    }
  }
  return coeffs;
}

bool is_rg_matrix(const IntMatrix& m, const Listing& listing) { return rg_coefficients(m, listing).has_value(); }

bool is_rg_matrix(const SignMatrix& m, const Listing& listing) { return is_rg_matrix(m.to_int(), listing); }

namespace {

// Colour refinement of the cells (r, c). The starting colour is the entry; each round splits
// a colour by the multiset of (colour(r, t), colour(t, c)) over t. On an RG-matrix every colour
// stays a function of g_r^-1 g_c, so the refined colours can stand in for the coefficients.
std::vector<std::uint32_t> refined_colours(const SignMatrix& m) {
  const std::size_t n = m.size();
  std::vector<std::uint32_t> colour(n * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) colour[r * n + c] = m(r, c) > 0 ? 0 : 1;
  std::size_t classes = 0;
  std::vector<std::uint64_t> sig(n);
  std::vector<std::pair<std::uint32_t, std::uint64_t>> key(n * n);
  for (std::size_t round = 0; round < n; ++round) {
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t t = 0; t < n; ++t)
          sig[t] = (std::uint64_t{colour[r * n + t]} << 32) | colour[t * n + c];
        std::sort(sig.begin(), sig.end());
        std::uint64_t h = 0xcbf29ce484222325ULL;
        for (auto v : sig) h = (h ^ v) * 0x100000001b3ULL + (h >> 29);
        key[r * n + c] = {colour[r * n + c], h};
      }
    std::vector<std::pair<std::uint32_t, std::uint64_t>> distinct(key);
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (std::size_t k = 0; k < n * n; ++k)
      colour[k] = static_cast<std::uint32_t>(std::lower_bound(distinct.begin(), distinct.end(), key[k]) - distinct.begin());
    if (distinct.size() == classes) break;
    classes = distinct.size();
  }
  return colour;
}

// Assigns elements to positions. Each node computes, for every unplaced element, the positions
// still consistent with the coefficients fixed so far, places forced elements directly and
// branches on the element with the fewest options.
class ListingSearch {
 public:
  ListingSearch(const SignMatrix& m, const Group& g)
      : colour_(refined_colours(m)),
        g_(g),
        n_(g.order()),
        elem_at_(n_, kFree),
        pos_of_(n_, kFree),
        coeff_(n_, kUnset) {}

  bool run() {
    // Every row of an RG-matrix is a rearrangement of the coefficients, and the diagonal is
    // constant; both survive refinement.
    std::vector<std::uint32_t> first(colour_.begin(), colour_.begin() + n_);
    std::sort(first.begin(), first.end());
    for (std::size_t r = 0; r < n_; ++r) {
      if (at(r, r) != at(0, 0)) return false;
      std::vector<std::uint32_t> row(colour_.begin() + r * n_, colour_.begin() + (r + 1) * n_);
      std::sort(row.begin(), row.end());
      if (row != first) return false;
    }
    if (!place(0, 0)) return false;
    return solve();
  }

  std::vector<Element> perm() const { return {elem_at_.begin(), elem_at_.end()}; }

 private:
  static constexpr std::uint32_t kUnset = static_cast<std::uint32_t>(-1);
  static constexpr std::size_t kFree = static_cast<std::size_t>(-1);

  std::uint32_t at(std::size_t r, std::size_t c) const { return colour_[r * n_ + c]; }

  bool constrain(std::size_t x, std::uint32_t value) {
    if (coeff_[x] == kUnset) {
      coeff_[x] = value;
      coeff_trail_.push_back(x);
      return true;
    }
    return coeff_[x] == value;
  }

  bool place(std::size_t q, std::size_t z) {
    elem_at_[q] = z;
    pos_of_[z] = q;
    placed_.push_back(q);
    const Element z_inv = g_.inv(static_cast<Element>(z));
    for (std::size_t r : placed_) {
      const Element x = static_cast<Element>(elem_at_[r]);
      if (!constrain(g_.mul(g_.inv(x), static_cast<Element>(z)), at(r, q))) return false;
      if (!constrain(g_.mul(z_inv, x), at(q, r))) return false;
    }
    return true;
  }

  void undo(std::size_t placed_mark, std::size_t coeff_mark) {
    while (placed_.size() > placed_mark) {
      const std::size_t q = placed_.back();
      pos_of_[elem_at_[q]] = kFree;
      elem_at_[q] = kFree;
      placed_.pop_back();
    }
    while (coeff_trail_.size() > coeff_mark) {
      coeff_[coeff_trail_.back()] = kUnset;
      coeff_trail_.pop_back();
    }
  }

  bool fits(std::size_t q, std::size_t z) const {
    const Element z_inv = g_.inv(static_cast<Element>(z));
    for (std::size_t r : placed_) {
      const Element x = static_cast<Element>(elem_at_[r]);
      const auto a = coeff_[g_.mul(g_.inv(x), static_cast<Element>(z))];
      if (a != kUnset && a != at(r, q)) return false;
      const auto b = coeff_[g_.mul(z_inv, x)];
      if (b != kUnset && b != at(q, r)) return false;
    }
    return true;
  }

  bool solve() {
    const std::size_t placed_mark = placed_.size();
    const std::size_t coeff_mark = coeff_trail_.size();
    std::size_t best = kFree;
    std::vector<std::size_t> best_options;
    while (true) {
      if (placed_.size() == n_) return true;
      best = kFree;
      best_options.clear();
      bool forced = false;
      for (std::size_t z = 0; z < n_ && !forced; ++z) {
        if (pos_of_[z] != kFree) continue;
        std::vector<std::size_t> options;
        for (std::size_t q = 0; q < n_; ++q)
          if (elem_at_[q] == kFree && fits(q, z)) options.push_back(q);
        if (options.empty()) {
          undo(placed_mark, coeff_mark);
          return false;
        }
        if (best == kFree || options.size() < best_options.size()) {
          best = z;
          best_options = std::move(options);
          forced = best_options.size() == 1;
        }
      }
      if (!forced) break;
      if (!place(best_options[0], best)) {
        undo(placed_mark, coeff_mark);
        return false;
      }
    }

    const std::vector<std::size_t> options = best_options;
    for (std::size_t q : options) {
      const std::size_t p_mark = placed_.size();
      const std::size_t c_mark = coeff_trail_.size();
      if (place(q, best) && solve()) return true;
      undo(p_mark, c_mark);
    }
    undo(placed_mark, coeff_mark);
    return false;
  }

  std::vector<std::uint32_t> colour_;
  const Group& g_;
  std::size_t n_;
  std::vector<std::size_t> elem_at_;
  std::vector<std::size_t> pos_of_;
  std::vector<std::uint32_t> coeff_;
  std::vector<std::size_t> placed_;
  std::vector<std::size_t> coeff_trail_;
};

}  // namespace

std::optional<Listing> recover_listing(const SignMatrix& m, const GroupPtr& group) {
  if (m.size() != group->order()) throw Error(ErrorKind::Structural, "matrix size does not match group order");
  ListingSearch search(m, *group);
  if (!search.run()) return std::nullopt;
  return Listing(group, search.perm());
}

}  // namespace grh
