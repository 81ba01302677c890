#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "grh/group.hpp"
#include "grh/matrix.hpp"

namespace grh {

enum class ListingSource { Given, Recovered, Product };

struct NamedConstruction {
  std::string name;
  GroupPtr group;
  SignMatrix matrix;
  std::optional<Listing> listing;
  ListingSource listing_source = ListingSource::Given;
  std::string claimed_source;
};

/// 4x4 circulant with first row (+,+,+,-) over C4, natural listing.
NamedConstruction circulant_c4();
/// The displayed 4x4 matrix over C2 x C2; listing recovered.
NamedConstruction c2c2_matrix();
/// The displayed 16x16 "almost circulant" matrix over C2 x C8; listing recovered.
NamedConstruction c2c8_matrix();
/// The displayed 16x16 matrix over Q8 x C2; listing recovered.
NamedConstruction quaternion_c2_matrix();
/// The 1x1 matrix (+) over the trivial group.
NamedConstruction trivial_construction();

/// Transcribed displays as written, one row per line.
const char* c2c8_display();
const char* quaternion_c2_display();
std::uint64_t display_checksum(const char* text);

NamedConstruction construction_by_family(const std::string& family);

/// A (x) B over A.group x B.group with the lexicographic product listing.
/// Throws Error(Precondition) if either listing is unknown.
NamedConstruction kronecker_extend(const NamedConstruction& a, const NamedConstruction& b);

/// Applies kronecker_extend with `factor` t times.
NamedConstruction extend_times(NamedConstruction base, const NamedConstruction& factor, std::size_t t);

}  // namespace grh
