#pragma once

#include <array>
#include <cstddef>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "netgalois/galois.hpp"

namespace netgalois {

/// n x n array of lattice elements, tau(i, j) <= e_j.
struct NetCollection {
  std::size_t n = 0;
  std::vector<Elem> tau;

  NetCollection() = default;
  explicit NetCollection(std::size_t order, Elem fill = 0) : n(order), tau(order * order, fill) {}

  Elem operator()(std::size_t i, std::size_t j) const { return tau.at(i * n + j); }
  Elem& operator()(std::size_t i, std::size_t j) { return tau.at(i * n + j); }

  friend bool operator==(const NetCollection&, const NetCollection&) = default;
  friend auto operator<=>(const NetCollection& a, const NetCollection& b) { return a.tau <=> b.tau; }
};

/// Row i of the matrix of labels.
std::vector<std::vector<std::string>> net_labels(const FiniteLattice& lattice, const NetCollection& tau);

/// How clause 4) of the net-collection definition is read.
///  - Aggregate: for every g, [g(e_i)]_j <= tau_ij for all i, j iff g fixes K_tau.
///  - PerTriple: for every g and distinct i, j, k,
///    [g(e_i)]_j <= tau_ij implies [g(tau_ki)]_j <= tau_kj.
enum class NetMode { Aggregate, PerTriple };

const char* to_string(NetMode mode);

struct NetCheck {
  bool valid = true;
  /// "1".."4" for the first violated clause, empty when valid.
  std::string clause;
  std::optional<GIndex> witness;
  std::optional<std::array<std::size_t, 3>> triple;
  std::string detail;
};

/// sigma_ij = join of x <= e_j with H_ij(x) ∩ F nonempty, sigma_ii = e_i.
/// Throws InputError unless H <= F.
NetCollection sigma_of(const GaloisContext& ctx, const Subgroup& f,
                       TransvectionMode mode = TransvectionMode::Auto);

/// Sublattice generated by 0 and the row sums sum_j tau_ij.
SublatticeHandle K_of(const GaloisContext& ctx, const NetCollection& tau);

/// Row sums sum_j tau_ij.
std::vector<Elem> row_sums(const GaloisContext& ctx, const NetCollection& tau);

NetCheck is_net_collection(const GaloisContext& ctx, const NetCollection& tau,
                           NetMode mode = NetMode::Aggregate);

/// Componentwise meet. Throws InputError on an empty list or mixed orders.
NetCollection intersect_nets(const FiniteLattice& lattice, std::span<const NetCollection> nets);

/// G(K_tau).
Subgroup G_of_net(const GaloisContext& ctx, const NetCollection& tau);

/// <H, H_ij(x) : x <= tau_ij, i != j>.
Subgroup transvection_closure(const GaloisContext& ctx, const NetCollection& tau,
                              TransvectionMode mode = TransvectionMode::Auto);

/// Elements l of L̄_0 with f(l) in L̄_0 for every f in F.
SublatticeHandle overline_L0_of(const GaloisContext& ctx, const Subgroup& f);

/// Quantifier range for the (△) condition.
///  - Full: every f in G (refused above kFullModeLimit).
///  - Reduced: H together with the elementary matrices.
enum class TauMode { Full, Reduced, Auto };

const char* to_string(TauMode mode);

/// Largest u <= e_j such that for every f, [f(e_i)]_j <= u implies
/// [f(x_i)]_j <= x_j, where x_k = [x]_k. Requires x in L̄_0 ∩ L_0'. Throws
/// Error when the admissible u have no largest element.
Elem tau_of_element(const GaloisContext& ctx, Elem x, std::size_t i, std::size_t j,
                    TauMode mode = TauMode::Auto);

/// The matrix (tau_ij(x)).
NetCollection tau_net_of_element(const GaloisContext& ctx, Elem x, TauMode mode = TauMode::Auto);

/// Componentwise meet of tau(x) over x in M.
NetCollection tau_net_of_sublattice(const GaloisContext& ctx, const SublatticeHandle& m,
                                    TauMode mode = TauMode::Auto);

/// Every collection with tau_ii = e_i and tau_ij an element of L_0' below e_j.
std::vector<NetCollection> candidate_nets(const GaloisContext& ctx);

/// L_0'(G(K_tau)), the closed sublattice attached to tau.
SublatticeHandle closed_sublattice_of(const GaloisContext& ctx, const NetCollection& tau);

/// Sublattices of L_0' sharing one fixer.
struct EquivClass {
  std::vector<SublatticeHandle> members;
  Subgroup common_fixer;
  /// psi(common_fixer), the largest member.
  SublatticeHandle closure;
};

/// Valid net collections and equivalence classes of an instance, computed
/// once and shared by all per-subgroup verifications.
class NetCatalog {
 public:
  struct Entry {
    NetCollection tau;
    SublatticeHandle k;
    Subgroup group;  // G(K_tau)
    SublatticeHandle closed;
  };

  /// `with_classes` enumerates the sublattices of L_0' (bounded by
  /// `class_bound` elements).
  explicit NetCatalog(std::shared_ptr<const GaloisContext> ctx, bool with_classes = true,
                      std::size_t class_bound = 32);

  const GaloisContext& context() const noexcept { return *ctx_; }
  const std::vector<NetCollection>& candidates() const noexcept { return candidates_; }
  const std::vector<NetCheck>& candidate_checks() const noexcept { return checks_; }
  const std::vector<Entry>& nets() const noexcept { return nets_; }
  std::optional<std::size_t> find(const NetCollection& tau) const;

  /// Normalizer of G(K_tau) in G, computed on first use.
  const Subgroup& normalizer(std::size_t net) const;

  bool has_classes() const noexcept { return has_classes_; }
  const std::string& classes_error() const noexcept { return classes_error_; }
  const std::vector<SublatticeHandle>& sublattices() const noexcept { return sublattices_; }
  const std::vector<EquivClass>& classes() const;
  /// Index of the class containing a sublattice of L_0'.
  std::size_t class_of(const SublatticeHandle& m) const;

 private:
  std::shared_ptr<const GaloisContext> ctx_;
  std::vector<NetCollection> candidates_;
  std::vector<NetCheck> checks_;
  std::vector<Entry> nets_;
  std::unique_ptr<std::once_flag[]> normalizer_once_;
  mutable std::vector<Subgroup> normalizers_;
  bool has_classes_ = false;
  std::string classes_error_;
  std::vector<SublatticeHandle> sublattices_;
  std::vector<std::size_t> class_index_;
  std::vector<EquivClass> classes_;
};

}  // namespace netgalois
