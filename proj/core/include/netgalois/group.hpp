#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "netgalois/bitset.hpp"
#include "netgalois/lattice.hpp"
#include "netgalois/matrix.hpp"
#include "netgalois/submodule_lattice.hpp"

namespace netgalois {

/// Position of a matrix inside the ambient group (its rank in code order).
using GIndex = std::uint32_t;

inline constexpr std::size_t kDefaultCap = 10'000'000;

/// Cap from NETGALOIS_CAP when set and positive, `fallback` otherwise.
std::size_t cap_from_env(std::size_t fallback = kDefaultCap);

/// The ambient group GL(n,R) enumerated in full, acting on the submodule
/// lattice. Elements are indexed by the order of their packed codes, so
/// iteration order is canonical. Immutable apart from lazily filled caches,
/// which are thread-safe.
class Ambient {
 public:
  /// Throws CapExceeded (before enumerating) when |GL(n,R)| > cap.
  static std::shared_ptr<const Ambient> general_linear(std::shared_ptr<const SubmoduleLattice> modules,
                                                       std::size_t cap = kDefaultCap);

  /// |GL(n, Z/p^k)| = |GL(n,p)| * p^((k-1) n^2).
  static std::uint64_t general_linear_order(const Ring& ring, std::size_t n);

  const SubmoduleLattice& modules() const noexcept { return *modules_; }
  const FiniteLattice& lattice() const noexcept { return modules_->lattice(); }
  const Ring& ring() const noexcept { return modules_->ring(); }
  std::size_t n() const noexcept { return modules_->n(); }
  std::size_t size() const noexcept { return codes_.size(); }

  GIndex identity() const noexcept { return identity_; }
  std::uint64_t code(GIndex g) const { return codes_.at(g); }
  Matrix matrix(GIndex g) const;
  std::uint32_t entry(GIndex g, std::size_t i, std::size_t j) const noexcept {
    return entries_[static_cast<std::size_t>(g) * n() * n() + i * n() + j];
  }

  std::optional<GIndex> find(const Matrix& m) const;
  /// Throws InputError for singular or malformed matrices.
  GIndex index_of(const Matrix& m) const;

  GIndex mul(GIndex a, GIndex b) const noexcept;
  GIndex inv(GIndex a) const noexcept { return inverse_[a]; }
  /// f s f^-1
  GIndex conj(GIndex f, GIndex s) const noexcept { return mul(mul(f, s), inverse_[f]); }

  Elem act(GIndex g, Elem x) const;
  bool fixes(GIndex g, Elem x) const;

  /// {g : g(x) = x}, computed on first use.
  const Bitset& stabilizer(Elem x) const;

  bool has_cayley_table() const noexcept { return !cayley_.empty(); }

 private:
  explicit Ambient(std::shared_ptr<const SubmoduleLattice> modules);
  std::optional<GIndex> find_code(std::uint64_t code) const;

  std::shared_ptr<const SubmoduleLattice> modules_;
  std::vector<std::uint64_t> codes_;
  std::vector<std::uint16_t> entries_;
  std::vector<GIndex> inverse_;
  std::vector<GIndex> dense_index_;
  std::unordered_map<std::uint64_t, GIndex> sparse_index_;
  std::vector<std::uint16_t> cayley_;
  std::vector<std::uint16_t> perm_;
  GIndex identity_ = 0;

  mutable std::unique_ptr<std::once_flag[]> stab_once_;
  mutable std::vector<Bitset> stab_;
};

/// A subgroup of the ambient group: sorted members, membership mask and a
/// generating set.
struct Subgroup {
  std::vector<GIndex> members;
  Bitset mask;
  std::vector<GIndex> generators;

  std::size_t order() const noexcept { return members.size(); }
  bool contains(GIndex g) const noexcept { return mask.test(g); }

  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.mask == b.mask; }
};

/// Product closure of the generators. Throws CapExceeded when the group
/// outgrows `cap`, carrying the number of elements found so far.
Subgroup close_subgroup(const Ambient& g, std::span<const GIndex> generators,
                        std::size_t cap = kDefaultCap);

/// Adds generators to an existing subgroup and closes again.
Subgroup extend_subgroup(const Ambient& g, const Subgroup& base, std::span<const GIndex> extra,
                         std::size_t cap = kDefaultCap);

/// Subgroup given by a membership mask. A generating set is chosen greedily
/// in index order. Throws ConsistencyError when the mask is not a group.
Subgroup subgroup_from_mask(const Ambient& g, const Bitset& mask);

/// The whole ambient group.
Subgroup whole_group(const Ambient& g);

/// {g : g(m) = m for every m in M}.
Subgroup fixer(const Ambient& g, std::span<const Elem> elements);

/// Mask form of fixer(), without generators.
Bitset fixer_mask(const Ambient& g, std::span<const Elem> elements);

/// Elements of `universe` fixed by every generator (so by the whole group).
SublatticeHandle fixed_lattice(const Ambient& g, std::span<const GIndex> generators,
                               std::span<const Elem> universe);

/// Elements of the whole lattice fixed by every generator.
SublatticeHandle fixed_lattice(const Ambient& g, std::span<const GIndex> generators);

/// f S f^-1 = S, tested on generators of S.
bool normalizes(const Ambient& g, GIndex f, const Subgroup& s);

/// {a in A : a S a^-1 = S}.
Subgroup normalizer(const Ambient& g, const Subgroup& s, const Subgroup& ambient);

bool is_subgroup_of(const Subgroup& s, const Subgroup& f);

/// S <= F and every generator of F normalizes S.
bool is_normal_in(const Ambient& g, const Subgroup& s, const Subgroup& f);

}  // namespace netgalois
