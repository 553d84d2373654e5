#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "netgalois/lattice.hpp"

namespace netgalois {

/// An n-tuple (x_1, ..., x_n) with x_i below the i-th frame atom.
struct Collection {
  std::vector<Elem> parts;

  friend bool operator==(const Collection&, const Collection&) = default;
};

/// The Boolean frame e_1..e_n of a modular lattice of finite length, with the
/// support calculus built on it.
///
/// Construction requires the atoms to generate a Boolean sublattice whose
/// atoms are exactly e_1..e_n, and all atoms to have the same dimension m.
/// Supports are precomputed for every element with
///   [x]_i = (x + ê_i) * e_i,
/// where ê_i is the join of all atoms except e_i.
class Frame {
 public:
  Frame(const FiniteLattice& lattice, std::vector<Elem> atoms);

  const FiniteLattice& lattice() const noexcept { return *lattice_; }
  std::size_t n() const noexcept { return atoms_.size(); }
  std::size_t m() const noexcept { return m_; }

  Elem atom(std::size_t i) const { return atoms_.at(i); }
  const std::vector<Elem>& atoms() const noexcept { return atoms_; }
  Elem hat(std::size_t i) const { return hats_.at(i); }

  /// Sublattice generated by the atoms (the Boolean algebra L_0).
  const SublatticeHandle& boolean_sublattice() const noexcept { return l0_; }

  /// Elements of the form x_1 + ... + x_n with x_i <= e_i, sorted.
  const std::vector<Elem>& lbar0() const noexcept { return lbar0_; }
  bool in_lbar0(Elem x) const { return in_lbar0_.test(x); }

  /// Elements below e_i, sorted by index.
  const std::vector<Elem>& below_atom(std::size_t i) const { return below_.at(i); }

  Collection support(Elem x) const;
  Elem support_part(Elem x, std::size_t i) const noexcept { return support_[x * n() + i]; }

  /// Element v_I with [v_I]_i = 0 for i in I and
  /// v_I + sum_{i in I} [v]_i = v + sum_{i in I} [v]_i.
  Elem complement_over(Elem v, std::span<const std::size_t> indices) const;

  /// The support of x when x is the sum of its support, nullopt otherwise.
  std::optional<Collection> lbar0_decomposition(Elem x) const;

  Elem sum(const Collection& c) const;

  /// Coordinatewise order, infimum and supremum. Throw InputError when a
  /// collection does not belong to this frame.
  bool collection_leq(const Collection& a, const Collection& b) const;
  Collection collection_inf(const Collection& a, const Collection& b) const;
  Collection collection_sup(const Collection& a, const Collection& b) const;

  /// True iff every part sits below its atom.
  bool is_collection(const Collection& c) const;

 private:
  void check_collection(const Collection& c) const;

  const FiniteLattice* lattice_;
  std::vector<Elem> atoms_;
  std::vector<Elem> hats_;
  std::size_t m_ = 0;
  SublatticeHandle l0_;
  std::vector<Elem> support_;
  std::vector<Elem> lbar0_;
  Bitset in_lbar0_;
  std::vector<std::vector<Elem>> below_;
};

}  // namespace netgalois
