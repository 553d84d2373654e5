#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "netgalois/bitset.hpp"
#include "netgalois/lattice.hpp"
#include "netgalois/matrix.hpp"
#include "netgalois/ring.hpp"

namespace netgalois {

/// The lattice of submodules of R^n for R = Z/p^k, with every element kept in
/// Howell canonical form. Elements are ordered by (length, pivot columns,
/// canonical entries), so 0 is the bottom and the coordinate submodules e_1,
/// ..., e_n appear in coordinate order among the elements of length k.
class SubmoduleLattice {
 public:
  /// Enumerates every submodule by closing {0} under sums with cyclic
  /// submodules. Throws CapExceeded when more than `cap` submodules appear.
  static std::shared_ptr<const SubmoduleLattice> build(const Ring& ring, std::size_t n,
                                                       std::size_t cap = 100000);

  const Ring& ring() const noexcept { return ring_; }
  std::size_t n() const noexcept { return n_; }
  const MatrixCodec& codec() const noexcept { return codec_; }
  const FiniteLattice& lattice() const noexcept { return *lattice_; }
  std::size_t size() const noexcept { return rows_.size(); }

  const std::vector<Vec>& rows(Elem x) const { return rows_.at(x); }
  std::size_t length(Elem x) const { return length_.at(x); }

  /// The coordinate submodule e_i R (0-based i).
  Elem coordinate(std::size_t i) const { return coordinates_.at(i); }
  const std::vector<Elem>& coordinates() const noexcept { return coordinates_; }

  /// Element spanned by the given rows.
  Elem element_of(std::vector<Vec> rows) const;

  /// The cyclic submodule generated by a vector (by vector code).
  Elem cyclic(std::uint32_t vec_code) const { return cyclic_[vec_code]; }

  /// Every vector of the submodule, as a bitset over vector codes.
  const Bitset& vectors(Elem x) const { return vectors_.at(x); }

  /// g(x) = { g v : v in x }, computed from the canonical rows of x.
  Elem image(const Matrix& g, Elem x) const;

  /// True iff g maps x into itself (hence onto, by counting).
  bool fixes(const Matrix& g, Elem x) const;

 private:
  SubmoduleLattice(const Ring& ring, std::size_t n);

  Ring ring_;
  std::size_t n_;
  MatrixCodec codec_;
  std::unique_ptr<FiniteLattice> lattice_;
  std::vector<std::vector<Vec>> rows_;
  std::vector<std::size_t> length_;
  std::vector<Bitset> vectors_;
  std::vector<Elem> cyclic_;
  std::vector<Elem> coordinates_;
  std::unordered_map<std::string, Elem> by_label_;
};

}  // namespace netgalois
