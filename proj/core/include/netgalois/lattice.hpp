#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "netgalois/bitset.hpp"

namespace netgalois {

/// Index of a lattice element.
using Elem = std::uint32_t;

/// A finite lattice stored as full meet and join tables.
///
/// Elements are the dense range [0, size()). Each element carries an opaque
/// label; labels are how other components (the submodule builder, net files)
/// refer to elements, never raw positions. The object is immutable after
/// construction and safe to share between threads.
class FiniteLattice {
 public:
  /// Tables are row-major size()*size(). Throws InputError on shape errors or
  /// out-of-range entries. Lattice laws are not checked here; see
  /// lattice_law_violation().
  FiniteLattice(std::vector<std::string> labels, std::vector<Elem> meet, std::vector<Elem> join,
                Elem bottom, Elem top);

  std::size_t size() const noexcept { return labels_.size(); }
  Elem bottom() const noexcept { return bottom_; }
  Elem top() const noexcept { return top_; }

  Elem meet(Elem a, Elem b) const noexcept { return meet_[a * size() + b]; }
  Elem join(Elem a, Elem b) const noexcept { return join_[a * size() + b]; }

  /// a <= b, i.e. a meet b == a. Throws std::out_of_range on bad indices.
  bool leq(Elem a, Elem b) const;
  bool leq_unchecked(Elem a, Elem b) const noexcept { return meet(a, b) == a; }

  Elem meet_all(std::span<const Elem> xs) const;
  Elem join_all(std::span<const Elem> xs) const;

  const std::string& label(Elem x) const { return labels_.at(x); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::optional<Elem> find(std::string_view label) const;

  /// Elements below / above x (inclusive).
  const Bitset& down_set(Elem x) const { return down_.at(x); }
  const Bitset& up_set(Elem x) const { return up_.at(x); }

  /// Lower covers of x.
  const std::vector<Elem>& lower_covers(Elem x) const { return lower_covers_.at(x); }

  /// True iff all maximal chains from bottom to every x have the same length.
  bool graded() const noexcept { return graded_; }

  /// Length of a maximal chain from bottom to x. Throws NotModularError when
  /// chain lengths disagree (the lattice is then not modular).
  std::size_t dimension(Elem x) const;

  const std::vector<Elem>& meet_table() const noexcept { return meet_; }
  const std::vector<Elem>& join_table() const noexcept { return join_; }

 private:
  std::vector<std::string> labels_;
  std::vector<Elem> meet_;
  std::vector<Elem> join_;
  Elem bottom_;
  Elem top_;
  std::unordered_map<std::string, Elem> by_label_;
  std::vector<Bitset> down_;
  std::vector<Bitset> up_;
  std::vector<std::vector<Elem>> lower_covers_;
  std::vector<std::size_t> rank_;
  bool graded_ = true;
  std::string grading_failure_;
};

/// A meet- and join-closed subset of a parent lattice. Members are sorted.
class SublatticeHandle {
 public:
  SublatticeHandle() = default;
  SublatticeHandle(const FiniteLattice& parent, std::vector<Elem> members);

  const FiniteLattice& parent() const { return *parent_; }
  const std::vector<Elem>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool contains(Elem x) const;
  bool is_subset_of(const SublatticeHandle& other) const;

  friend bool operator==(const SublatticeHandle& a, const SublatticeHandle& b) {
    return a.members_ == b.members_;
  }

 private:
  const FiniteLattice* parent_ = nullptr;
  std::vector<Elem> members_;
};

/// First violated lattice law, or nullopt. Exhaustive for size() <= 200,
/// otherwise `samples` random triples drawn with `seed`.
std::optional<std::string> lattice_law_violation(const FiniteLattice& lattice,
                                                 std::uint64_t seed = 1,
                                                 std::size_t samples = 200000);

/// Triple (x, y, z) with x <= z and x+(y*z) != (x+y)*z, or nullopt if modular.
std::optional<std::array<Elem, 3>> modularity_violation(const FiniteLattice& lattice);

inline bool is_modular(const FiniteLattice& lattice) {
  return !modularity_violation(lattice).has_value();
}

/// Replays a modularity witness. True iff the triple still violates the law.
bool modularity_witness_fails(const FiniteLattice& lattice, const std::array<Elem, 3>& triple);

/// Smallest meet/join-closed set containing `generators`. Throws InputError on
/// an empty set.
SublatticeHandle sublattice_generated(const FiniteLattice& lattice,
                                      std::span<const Elem> generators);

/// All nonempty sublattices of `universe` (itself a sublattice), ordered by
/// size and then members. Refuses universes larger than `bound` elements.
std::vector<SublatticeHandle> enumerate_sublattices(const SublatticeHandle& universe,
                                                    std::size_t bound = 32);

/// Same, over the whole lattice.
std::vector<SublatticeHandle> enumerate_sublattices(const FiniteLattice& lattice,
                                                    std::size_t bound = 32);

struct BooleanCheck {
  bool is_boolean = false;
  std::vector<Elem> atoms;  // in element-index order
};

/// Complemented and distributive test; atoms are the covers of the
/// sublattice's own bottom.
BooleanCheck is_boolean(const SublatticeHandle& sub);

nlohmann::json lattice_to_json(const FiniteLattice& lattice);
FiniteLattice lattice_from_json(const nlohmann::json& doc);

/// Hasse diagram in Graphviz DOT format.
std::string lattice_to_dot(const FiniteLattice& lattice);

/// The five-element non-modular pentagon 0 < a < c < 1, 0 < b < 1.
FiniteLattice pentagon_lattice();

/// Builds a lattice from an order relation given as a leq predicate on
/// [0, count). Throws InputError when some pair has no meet or join.
template <class Leq>
FiniteLattice lattice_from_order(std::vector<std::string> labels, Leq&& leq);

}  // namespace netgalois

#include "netgalois/detail/lattice_from_order.hpp"
