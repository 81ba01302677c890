#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace grh {

/// Dense row-major square matrix over exact integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t size, std::int64_t fill = 0) : size_(size), data_(size * size, fill) {}

  static IntMatrix identity(std::size_t size);

  std::size_t size() const noexcept { return size_; }

  std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * size_ + c]; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * size_ + c]; }

  std::span<const std::int64_t> row(std::size_t r) const { return {data_.data() + r * size_, size_}; }

  IntMatrix operator*(const IntMatrix& rhs) const;
  IntMatrix transpose() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::int64_t> data_;
};

/// Where an RG-matrix came from; carried along for reporting only.
struct Provenance {
  std::string group_name;
  std::vector<std::uint32_t> listing;
  std::string source;
};

/// Square matrix with every entry in {+1, -1}.
class SignMatrix {
 public:
  SignMatrix() = default;

  /// Throws Error(Domain) if any entry is not +1 or -1.
  explicit SignMatrix(const IntMatrix& values);
  static SignMatrix from_rows(const std::vector<std::vector<int>>& rows);
  static SignMatrix all_ones(std::size_t size);

  std::size_t size() const noexcept { return size_; }

  int operator()(std::size_t r, std::size_t c) const { return data_[r * size_ + c]; }
  std::span<const std::int8_t> row(std::size_t r) const { return {data_.data() + r * size_, size_}; }

  /// Returns a copy with entry (r, c) negated.
  SignMatrix flipped(std::size_t r, std::size_t c) const;
  SignMatrix transpose() const;
  SignMatrix negated() const;
  /// Applies the same permutation to rows and columns: out(r, c) = in(perm[r], perm[c]).
  SignMatrix permuted(std::span<const std::uint32_t> perm) const;
  /// out(r, c) = in(row_perm[r], c).
  SignMatrix rows_permuted(std::span<const std::uint32_t> row_perm) const;

  IntMatrix to_int() const;

  const std::optional<Provenance>& provenance() const noexcept { return provenance_; }
  void set_provenance(Provenance p) { provenance_ = std::move(p); }

  /// Entry equality; provenance is ignored.
  friend bool operator==(const SignMatrix& a, const SignMatrix& b) {
    return a.size_ == b.size_ && a.data_ == b.data_;
  }

 private:
  std::size_t size_ = 0;
  std::vector<std::int8_t> data_;
  std::optional<Provenance> provenance_;
};

}  // namespace grh
