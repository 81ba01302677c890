#include "grh/group.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "grh/error.hpp"

namespace grh {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidOrder: return "invalid-order";
    case ErrorKind::Capacity: return "capacity";
    case ErrorKind::Structural: return "structural";
    case ErrorKind::Domain: return "domain";
    case ErrorKind::KindMismatch: return "kind-mismatch";
    case ErrorKind::Precondition: return "precondition";
    case ErrorKind::Format: return "format";
  }
  return "unknown";
}

Group::Group(std::string name, std::size_t order, std::vector<Element> table)
    : name_(std::move(name)), order_(order), mul_(std::move(table)), inv_(order, 0) {
  if (order_ == 0) throw Error(ErrorKind::InvalidOrder, "group order must be positive");
  if (order_ > kMaxGroupOrder)
    throw Error(ErrorKind::Capacity, "group order " + std::to_string(order_) + " exceeds " +
                                         std::to_string(kMaxGroupOrder));
  if (mul_.size() != order_ * order_) throw Error(ErrorKind::Structural, "table size is not order^2");

  std::vector<char> seen(order_);
  for (std::size_t r = 0; r < order_; ++r) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t c = 0; c < order_; ++c) {
      const Element x = mul_[r * order_ + c];
      if (x >= order_ || seen[x]) throw Error(ErrorKind::Structural, name_ + ": row " + std::to_string(r) + " is not a permutation");
      seen[x] = 1;
    }
  }
  for (std::size_t c = 0; c < order_; ++c) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t r = 0; r < order_; ++r) {
      const Element x = mul_[r * order_ + c];
      if (seen[x]) throw Error(ErrorKind::Structural, name_ + ": column " + std::to_string(c) + " is not a permutation");
      seen[x] = 1;
    }
  }
  for (Element x = 0; x < order_; ++x) {
    if (mul(0, x) != x || mul(x, 0) != x) throw Error(ErrorKind::Structural, name_ + ": element 0 is not the identity");
  }
  // Latin rows guarantee a unique right inverse; check it is two-sided.
  for (Element x = 0; x < order_; ++x) {
    for (Element y = 0; y < order_; ++y) {
      if (mul(x, y) == 0) {
        if (mul(y, x) != 0) throw Error(ErrorKind::Structural, name_ + ": inverse is not two-sided");
        inv_[x] = y;
        break;
      }
    }
  }
}

std::size_t Group::element_order(Element a) const {
  std::size_t k = 1;
  for (Element x = a; x != 0; x = mul(x, a)) ++k;
  return k;
}

bool Group::is_abelian() const {
  for (Element a = 0; a < order_; ++a)
    for (Element b = a + 1; b < order_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

bool Group::is_associative() const {
  for (Element a = 0; a < order_; ++a)
    for (Element b = 0; b < order_; ++b) {
      const Element ab = mul(a, b);
      for (Element c = 0; c < order_; ++c)
        if (mul(ab, c) != mul(a, mul(b, c))) return false;
    }
  return true;
}

GroupPtr cyclic_group(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidOrder, "cyclic group order must be positive");
  if (n > kMaxGroupOrder) throw Error(ErrorKind::Capacity, "cyclic group order too large");
  std::vector<Element> mul(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) mul[i * n + j] = static_cast<Element>((i + j) % n);
  return std::make_shared<const Group>("C" + std::to_string(n), n, std::move(mul));
}

GroupPtr direct_product(const GroupPtr& g, const GroupPtr& h) {
  const std::size_t a = g->order();
  const std::size_t b = h->order();
  if (a * b > kMaxGroupOrder)
    throw Error(ErrorKind::Capacity, "direct product order " + std::to_string(a * b) + " exceeds " +
                                         std::to_string(kMaxGroupOrder));
  const std::size_t n = a * b;
  std::vector<Element> mul(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const Element first = g->mul(static_cast<Element>(x / b), static_cast<Element>(y / b));
      const Element second = h->mul(static_cast<Element>(x % b), static_cast<Element>(y % b));
      mul[x * n + y] = static_cast<Element>(first * b + second);
    }
  }
  return std::make_shared<const Group>(g->name() + "x" + h->name(), n, std::move(mul));
}

GroupPtr quaternion_group() {
  static constexpr Element kTable[8][8] = {
      {0, 1, 2, 3, 4, 5, 6, 7},
      {1, 0, 3, 2, 5, 4, 7, 6},
      {2, 3, 1, 0, 6, 7, 5, 4},
      {3, 2, 0, 1, 7, 6, 4, 5},
      {4, 5, 7, 6, 1, 0, 2, 3},
      {5, 4, 6, 7, 0, 1, 3, 2},
      {6, 7, 4, 5, 3, 2, 1, 0},
      {7, 6, 5, 4, 2, 3, 0, 1},
  };
  std::vector<Element> mul(&kTable[0][0], &kTable[0][0] + 64);
  return std::make_shared<const Group>("Q8", 8, std::move(mul));
}

namespace {

GroupPtr factor_by_name(const std::string& token) {
  if (token == "Q8" || token == "H") return quaternion_group();
  if (token.size() >= 2 && token[0] == 'C' &&
      std::all_of(token.begin() + 1, token.end(), [](unsigned char ch) { return std::isdigit(ch); })) {
    if (token.size() > 6) throw Error(ErrorKind::Capacity, "cyclic factor too large: " + token);
    return cyclic_group(std::stoul(token.substr(1)));
  }
  throw Error(ErrorKind::Format, "unknown group factor '" + token + "'");
}

}  // namespace

GroupPtr group_by_name(const std::string& name) {
  GroupPtr result;
  std::size_t start = 0;
  while (start <= name.size()) {
    const std::size_t end = std::min(name.find('x', start), name.size());
    GroupPtr factor = factor_by_name(name.substr(start, end - start));
    result = result ? direct_product(result, factor) : factor;
    start = end + 1;
  }
  return result;
}

Listing::Listing(GroupPtr group, std::vector<Element> perm) : group_(std::move(group)), perm_(std::move(perm)) {
  if (!group_) throw Error(ErrorKind::Structural, "listing without a group");
  if (perm_.size() != group_->order())
    throw Error(ErrorKind::Structural, "listing length " + std::to_string(perm_.size()) +
                                           " does not match group order " + std::to_string(group_->order()));
  std::vector<char> seen(perm_.size());
  for (Element x : perm_) {
    if (x >= perm_.size() || seen[x]) throw Error(ErrorKind::Structural, "listing is not a permutation");
    seen[x] = 1;
  }
}

Listing Listing::natural(GroupPtr group) {
  std::vector<Element> perm(group->order());
  std::iota(perm.begin(), perm.end(), Element{0});
  return Listing(std::move(group), std::move(perm));
}

std::vector<std::uint32_t> Listing::positions() const {
  std::vector<std::uint32_t> pos(perm_.size());
  for (std::size_t k = 0; k < perm_.size(); ++k) pos[perm_[k]] = static_cast<std::uint32_t>(k);
  return pos;
}

bool operator==(const Listing& a, const Listing& b) {
  if (a.perm_ != b.perm_) return false;
  if (a.group_ == b.group_) return true;
  return a.group_->order() == b.group_->order() &&
         std::equal(a.group_->table().begin(), a.group_->table().end(), b.group_->table().begin());
}

Listing paired_listing(std::size_t m) {
  if (m == 0 || m % 4 != 0)
    throw Error(ErrorKind::InvalidOrder, "paired listing needs an order divisible by 4, got " + std::to_string(m));
  const std::size_t half = m / 2;
  std::vector<Element> perm(m);
  for (std::size_t k = 0; k < half; ++k) {
    perm[2 * k] = static_cast<Element>(k);
    perm[2 * k + 1] = static_cast<Element>(k + half);
  }
  return Listing(cyclic_group(m), std::move(perm));
}

Listing product_listing(const Listing& a, const Listing& b, GroupPtr product) {
  const std::size_t nb = b.size();
  if (product->order() != a.size() * nb) throw Error(ErrorKind::Structural, "product group order mismatch");
  std::vector<Element> perm(product->order());
  for (std::size_t x = 0; x < a.size(); ++x)
    for (std::size_t y = 0; y < nb; ++y) perm[x * nb + y] = static_cast<Element>(a[x] * nb + b[y]);
  return Listing(std::move(product), std::move(perm));
}

}  // namespace grh
