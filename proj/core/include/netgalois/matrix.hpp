#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "netgalois/ring.hpp"

namespace netgalois {

inline constexpr std::size_t kMaxDim = 4;

/// Column vector of length <= kMaxDim; unused tail entries stay zero.
using Vec = std::array<std::uint32_t, kMaxDim>;

/// Square matrix of order n <= kMaxDim, row-major, entries reduced mod q.
struct Matrix {
  std::size_t n = 0;
  std::array<std::uint32_t, kMaxDim * kMaxDim> e{};

  std::uint32_t& operator()(std::size_t i, std::size_t j) { return e[i * kMaxDim + j]; }
  std::uint32_t operator()(std::size_t i, std::size_t j) const { return e[i * kMaxDim + j]; }

  friend bool operator==(const Matrix&, const Matrix&) = default;
};

Matrix identity_matrix(std::size_t n);

Matrix multiply(const Ring& ring, const Matrix& a, const Matrix& b);

/// g * v with v a column vector.
Vec apply(const Ring& ring, const Matrix& g, const Vec& v);

std::uint32_t determinant(const Ring& ring, const Matrix& m);

/// Inverse by Gauss-Jordan over the local ring, nullopt when singular.
std::optional<Matrix> inverse(const Ring& ring, const Matrix& m);

/// Over a commutative local ring a matrix is invertible iff its determinant
/// is a unit.
inline bool is_invertible(const Ring& ring, const Matrix& m) {
  return ring.is_unit(determinant(ring, m));
}

/// "[[a,b],[c,d]]"
std::string to_string(const Matrix& m);

/// Packs matrices and vectors into mixed-radix integers with base q.
/// Row-major order, so code order equals lexicographic order of entries.
class MatrixCodec {
 public:
  /// Throws InputError when q^(n*n) does not fit in 63 bits.
  MatrixCodec(std::uint32_t q, std::size_t n);

  std::size_t n() const noexcept { return n_; }
  std::uint64_t code_space() const noexcept { return space_; }
  std::uint64_t vector_space() const noexcept { return vec_space_; }

  std::uint64_t encode(const Matrix& m) const noexcept;
  Matrix decode(std::uint64_t code) const noexcept;

  std::uint32_t encode_vec(const Vec& v) const noexcept;
  Vec decode_vec(std::uint32_t code) const noexcept;

 private:
  std::uint32_t q_;
  std::size_t n_;
  std::uint64_t space_ = 1;
  std::uint64_t vec_space_ = 1;
};

}  // namespace netgalois
