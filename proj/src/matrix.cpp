#include "grh/matrix.hpp"

#include "grh/error.hpp"

namespace grh {

IntMatrix IntMatrix::identity(std::size_t size) {
  IntMatrix m(size);
  for (std::size_t k = 0; k < size; ++k) m(k, k) = 1;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (size_ != rhs.size_) throw Error(ErrorKind::Structural, "matrix size mismatch in product");
  IntMatrix out(size_);
  for (std::size_t r = 0; r < size_; ++r)
    for (std::size_t k = 0; k < size_; ++k) {
      const std::int64_t a = (*this)(r, k);
      if (a == 0) continue;
      for (std::size_t c = 0; c < size_; ++c) out(r, c) += a * rhs(k, c);
    }
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix out(size_);
  for (std::size_t r = 0; r < size_; ++r)
    for (std::size_t c = 0; c < size_; ++c) out(c, r) = (*this)(r, c);
  return out;
}

SignMatrix::SignMatrix(const IntMatrix& values) : size_(values.size()), data_(values.size() * values.size()) {
  for (std::size_t r = 0; r < size_; ++r)
    for (std::size_t c = 0; c < size_; ++c) {
      const std::int64_t v = values(r, c);
      if (v != 1 && v != -1)
        throw Error(ErrorKind::Domain, "entry (" + std::to_string(r) + ", " + std::to_string(c) + ") = " +
                                           std::to_string(v) + " is not a sign");
      data_[r * size_ + c] = static_cast<std::int8_t>(v);
    }
}

SignMatrix SignMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
  IntMatrix m(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != rows.size()) throw Error(ErrorKind::Structural, "matrix rows are not square");
    for (std::size_t c = 0; c < rows.size(); ++c) m(r, c) = rows[r][c];
  }
  return SignMatrix(m);
}

SignMatrix SignMatrix::all_ones(std::size_t size) { return SignMatrix(IntMatrix(size, 1)); }

SignMatrix SignMatrix::flipped(std::size_t r, std::size_t c) const {
  SignMatrix out = *this;
  out.data_[r * size_ + c] = static_cast<std::int8_t>(-out.data_[r * size_ + c]);
  out.provenance_.reset();
  return out;
}

SignMatrix SignMatrix::transpose() const {
  SignMatrix out = *this;
  for (std::size_t r = 0; r < size_; ++r)
    for (std::size_t c = 0; c < size_; ++c) out.data_[c * size_ + r] = data_[r * size_ + c];
  out.provenance_.reset();
  return out;
}

SignMatrix SignMatrix::negated() const {
  SignMatrix out = *this;
  for (auto& v : out.data_) v = static_cast<std::int8_t>(-v);
  out.provenance_.reset();
  return out;
}

SignMatrix SignMatrix::permuted(std::span<const std::uint32_t> perm) const {
  if (perm.size() != size_) throw Error(ErrorKind::Structural, "permutation length mismatch");
  SignMatrix out = *this;
  for (std::size_t r = 0; r < size_; ++r)
    for (std::size_t c = 0; c < size_; ++c) out.data_[r * size_ + c] = data_[perm[r] * size_ + perm[c]];
  out.provenance_.reset();
  return out;
}

SignMatrix SignMatrix::rows_permuted(std::span<const std::uint32_t> row_perm) const {
  if (row_perm.size() != size_) throw Error(ErrorKind::Structural, "permutation length mismatch");
  SignMatrix out = *this;
  for (std::size_t r = 0; r < size_; ++r)
    for (std::size_t c = 0; c < size_; ++c) out.data_[r * size_ + c] = data_[row_perm[r] * size_ + c];
  out.provenance_.reset();
  return out;
}

IntMatrix SignMatrix::to_int() const {
  IntMatrix out(size_);
  for (std::size_t r = 0; r < size_; ++r)
    for (std::size_t c = 0; c < size_; ++c) out(r, c) = data_[r * size_ + c];
  return out;
}

}  // namespace grh
