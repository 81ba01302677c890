#include "grh/constructions.hpp"

#include "grh/error.hpp"
#include "grh/group_ring.hpp"

namespace grh {

namespace {

constexpr std::uint64_t fnv1a(const char* text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const char* p = text; *p; ++p) {
    h ^= static_cast<unsigned char>(*p);
    h *= 0x100000001b3ULL;
  }
  return h;
}

// Block columns separated by spaces, as displayed.
constexpr const char* kC2C8 =
    "++ +- ++ +- ++ +- -- -+\n"
    "++ -+ ++ -+ ++ -+ -- +-\n"
    "-+ ++ +- ++ +- ++ +- --\n"
    "+- ++ -+ ++ -+ ++ -+ --\n"
    "-- -+ ++ +- ++ +- ++ +-\n"
    "-- +- ++ -+ ++ -+ ++ -+\n"
    "+- -- -+ ++ +- ++ +- ++\n"
    "-+ -- +- ++ -+ ++ -+ ++\n"
    "++ +- -- -+ ++ +- ++ +-\n"
    "++ -+ -- +- ++ -+ ++ -+\n"
    "+- ++ +- -- -+ ++ +- ++\n"
    "-+ ++ -+ -- +- ++ -+ ++\n"
    "++ +- ++ +- -- -+ ++ +-\n"
    "++ -+ ++ -+ -- +- ++ -+\n"
    "+- ++ +- ++ +- -- -+ ++\n"
    "-+ ++ -+ ++ -+ -- +- ++\n";

constexpr const char* kQ8C2 =
    "++ +- ++ +- ++ -+ -- +-\n"
    "++ -+ ++ -+ ++ +- -- -+\n"
    "-+ ++ -+ ++ +- ++ -+ --\n"
    "+- ++ +- ++ -+ ++ +- --\n"
    "++ +- ++ -+ -- +- ++ +-\n"
    "++ -+ ++ +- -- -+ ++ -+\n"
    "-+ ++ +- ++ -+ -- -+ ++\n"
    "+- ++ -+ ++ +- -- +- ++\n"
    "++ -+ -- +- ++ +- ++ +-\n"
    "++ +- -- -+ ++ -+ ++ -+\n"
    "+- ++ -+ -- -+ ++ -+ ++\n"
    "-+ ++ +- -- +- ++ +- ++\n"
    "-- +- ++ +- ++ +- ++ -+\n"
    "-- -+ ++ -+ ++ -+ ++ +-\n"
    "-+ -- -+ ++ -+ ++ +- ++\n"
    "+- -- +- ++ +- ++ -+ ++\n";

constexpr std::uint64_t kC2C8Checksum = 0xd91f48b1325de1e5ULL;
constexpr std::uint64_t kQ8C2Checksum = 0xdd91f9bd2cdfbca5ULL;
static_assert(fnv1a(kC2C8) == kC2C8Checksum, "C2xC8 display transcription changed");
static_assert(fnv1a(kQ8C2) == kQ8C2Checksum, "Q8xC2 display transcription changed");

SignMatrix parse_display(const char* text) {
  std::vector<std::vector<int>> rows(1);
  for (const char* p = text; *p; ++p) {
    if (*p == '+') rows.back().push_back(1);
    else if (*p == '-') rows.back().push_back(-1);
    else if (*p == '\n') rows.emplace_back();
  }
  if (rows.back().empty()) rows.pop_back();
  return SignMatrix::from_rows(rows);
}

NamedConstruction with_recovered_listing(std::string name, GroupPtr group, SignMatrix matrix, std::string source) {
  NamedConstruction c{std::move(name), group, std::move(matrix), std::nullopt, ListingSource::Recovered, std::move(source)};
  c.listing = recover_listing(c.matrix, group);
  if (!c.listing) throw Error(ErrorKind::Structural, c.name + " is not an RG-matrix over " + group->name());
  c.matrix.set_provenance({group->name(), {c.listing->perm().begin(), c.listing->perm().end()}, c.claimed_source});
  return c;
}

}  // namespace

const char* c2c8_display() { return kC2C8; }
const char* quaternion_c2_display() { return kQ8C2; }
std::uint64_t display_checksum(const char* text) { return fnv1a(text); }

NamedConstruction circulant_c4() {
  auto c4 = cyclic_group(4);
  const std::vector<int> row{1, 1, 1, -1};
  auto listing = Listing::natural(c4);
  SignMatrix m = rg_sign_matrix(circulant_from_row(row), listing);
  return {"c4", c4, m, listing, ListingSource::Given, "circulant 4x4 with first row (+,+,+,-)"};
}

NamedConstruction c2c2_matrix() {
  SignMatrix m = SignMatrix::from_rows({{1, 1, 1, -1}, {1, 1, -1, 1}, {1, -1, 1, 1}, {-1, 1, 1, 1}});
  return with_recovered_listing("c2c2", group_by_name("C2xC2"), m, "Z(C2xC2) display");
}

NamedConstruction c2c8_matrix() {
  return with_recovered_listing("c2c8", group_by_name("C2xC8"), parse_display(kC2C8), "Z(C2xC8) display");
}

NamedConstruction quaternion_c2_matrix() {
  return with_recovered_listing("q8c2", group_by_name("Q8xC2"), parse_display(kQ8C2), "Z(Q8xC2) display");
}

NamedConstruction trivial_construction() {
  auto c1 = cyclic_group(1);
  SignMatrix m = SignMatrix::all_ones(1);
  m.set_provenance({c1->name(), {0}, "trivial"});
  return {"c1", c1, std::move(m), Listing::natural(c1), ListingSource::Given, "trivial"};
}

NamedConstruction construction_by_family(const std::string& family) {
  if (family == "c4") return circulant_c4();
  if (family == "c2c2") return c2c2_matrix();
  if (family == "c2c8") return c2c8_matrix();
  if (family == "q8c2") return quaternion_c2_matrix();
  if (family == "c1") return trivial_construction();
  throw Error(ErrorKind::Format, "unknown construction family '" + family + "'");
}

NamedConstruction kronecker_extend(const NamedConstruction& a, const NamedConstruction& b) {
  if (!a.listing || !b.listing) throw Error(ErrorKind::Precondition, "kronecker_extend needs known listings on both inputs");
  GroupPtr group = direct_product(a.group, b.group);
  const std::size_t na = a.matrix.size();
  const std::size_t nb = b.matrix.size();
  IntMatrix k(na * nb);
  for (std::size_t r1 = 0; r1 < na; ++r1)
    for (std::size_t c1 = 0; c1 < na; ++c1) {
      const int x = a.matrix(r1, c1);
      for (std::size_t r2 = 0; r2 < nb; ++r2)
        for (std::size_t c2 = 0; c2 < nb; ++c2) k(r1 * nb + r2, c1 * nb + c2) = x * b.matrix(r2, c2);
    }
  Listing listing = product_listing(*a.listing, *b.listing, group);
  SignMatrix m(k);
  m.set_provenance({group->name(), {listing.perm().begin(), listing.perm().end()}, "kronecker"});
  return {a.name + "*" + b.name, group, std::move(m), std::move(listing), ListingSource::Product,
          a.claimed_source + " (x) " + b.claimed_source};
}

NamedConstruction extend_times(NamedConstruction base, const NamedConstruction& factor, std::size_t t) {
  for (std::size_t k = 0; k < t; ++k) base = kronecker_extend(base, factor);
  return base;
}

}  // namespace grh
