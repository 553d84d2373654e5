#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <tuple>
#include <vector>

#include "netgalois/frame.hpp"
#include "netgalois/group.hpp"
#include "netgalois/ring.hpp"
#include "netgalois/submodule_lattice.hpp"

namespace netgalois {

/// How transvection sets are computed.
///  - Full filters the whole ambient group with the defining predicate.
///  - Quick filters H * {identity, I + xi E_ab} with the same predicate.
///  - Auto picks Full when |G| <= kFullModeLimit.
enum class TransvectionMode { Full, Quick, Auto };

inline constexpr std::size_t kFullModeLimit = 100000;

const char* to_string(TransvectionMode mode);

/// Everything derived from an instance (R, n): the submodule lattice with
/// its coordinate frame, G = GL(n,R), H = G(L_0), L_0' = L(H), the sets H_i,
/// G(L̄_0), and the transvection machinery. Shared read-only between
/// workers; lazily filled caches are guarded.
class GaloisContext {
 public:
  static std::shared_ptr<const GaloisContext> build(const Ring& ring, std::size_t n,
                                                    std::size_t cap = cap_from_env());

  const Ring& ring() const noexcept { return group_->ring(); }
  std::size_t n() const noexcept { return group_->n(); }
  const SubmoduleLattice& modules() const noexcept { return *modules_; }
  const FiniteLattice& lattice() const noexcept { return modules_->lattice(); }
  const Frame& frame() const noexcept { return *frame_; }
  const Ambient& group() const noexcept { return *group_; }
  std::size_t cap() const noexcept { return cap_; }

  const Subgroup& G() const noexcept { return whole_; }
  const Subgroup& H() const noexcept { return h_; }
  const Subgroup& H_i(std::size_t i) const { return h_i_.at(i); }
  const Subgroup& G_lbar0() const noexcept { return g_lbar0_; }
  const SublatticeHandle& L0() const { return frame_->boolean_sublattice(); }
  const SublatticeHandle& L0prime() const noexcept { return l0prime_; }
  const SublatticeHandle& lbar0() const noexcept { return lbar0_; }

  TransvectionMode resolve(TransvectionMode mode) const noexcept;

  /// Support of g(e_i) when g satisfies clauses 1) and 2) of the transvection
  /// definition for index i; nullopt otherwise.
  std::optional<Collection> transvection_shape(GIndex g, std::size_t i) const;

  /// g in H_ij(x): clauses 1)-3).
  bool is_transvection(GIndex g, std::size_t i, std::size_t j, Elem x) const;

  /// Sorted members of H_ij(x). Quick mode returns the members found in
  /// H * {identity, elementary matrices}.
  const std::vector<GIndex>& transvection_members(std::size_t i, std::size_t j, Elem x,
                                                  TransvectionMode mode = TransvectionMode::Auto) const;

  /// Sorted union of all H_ij(x), i != j, x <= e_j.
  const std::vector<GIndex>& all_transvections(TransvectionMode mode = TransvectionMode::Auto) const;

  /// All matrices I + xi E_ab with a != b and xi != 0, sorted.
  const std::vector<GIndex>& elementary_family() const noexcept { return elementary_; }

  /// phi(M) = G(M) for M a subset of L_0'. Throws InputError otherwise.
  Subgroup galois_phi(const SublatticeHandle& m) const;

  /// psi(F) = L_0'(F) for H <= F. Throws InputError otherwise.
  SublatticeHandle galois_psi(const Subgroup& f) const;

  /// H_ij(x) ∩ F1 = H_ij(x) ∩ F2 for all i != j, x <= e_j.
  bool same_transvections(const Subgroup& f1, const Subgroup& f2,
                          TransvectionMode mode = TransvectionMode::Auto) const;

  /// First transvection lying in exactly one of the groups.
  std::optional<GIndex> transvection_difference(const Subgroup& f1, const Subgroup& f2,
                                                TransvectionMode mode = TransvectionMode::Auto) const;

  /// Closure of the generators under the context cap.
  Subgroup subgroup_of(std::span<const GIndex> generators) const;

 private:
  GaloisContext() = default;

  std::shared_ptr<const SubmoduleLattice> modules_;
  std::unique_ptr<Frame> frame_;
  std::shared_ptr<const Ambient> group_;
  std::size_t cap_ = kDefaultCap;
  Subgroup whole_;
  Subgroup h_;
  std::vector<Subgroup> h_i_;
  Subgroup g_lbar0_;
  SublatticeHandle l0prime_;
  SublatticeHandle lbar0_;
  std::vector<GIndex> elementary_;

  mutable std::mutex cache_mutex_;
  mutable std::map<std::tuple<std::size_t, std::size_t, Elem, bool>, std::vector<GIndex>> members_cache_;
  mutable std::map<bool, std::vector<GIndex>> all_cache_;
};

}  // namespace netgalois
