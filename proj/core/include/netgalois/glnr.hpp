#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "netgalois/nets.hpp"
#include "netgalois/theorems.hpp"

namespace netgalois {

/// Ideal matrix over Z/p^k: entry (i, j) is a with the ideal (p^a);
/// a = 0 is the whole ring, a = k the zero ideal.
struct DNet {
  std::size_t n = 0;
  std::uint32_t k = 1;
  std::vector<std::uint32_t> exp;

  DNet() = default;
  DNet(std::size_t order, std::uint32_t depth, std::uint32_t fill = 0)
      : n(order), k(depth), exp(order * order, fill) {}

  std::uint32_t operator()(std::size_t i, std::size_t j) const { return exp.at(i * n + j); }
  std::uint32_t& operator()(std::size_t i, std::size_t j) { return exp.at(i * n + j); }

  friend bool operator==(const DNet&, const DNet&) = default;
  friend auto operator<=>(const DNet& a, const DNet& b) { return a.exp <=> b.exp; }
};

/// sigma_ii = R and sigma_ir sigma_rj ⊆ sigma_ij for all i, r, j.
bool is_dnet(const DNet& sigma);

/// The first (i, r, j) violating the product law, if any.
std::optional<std::array<std::size_t, 3>> dnet_law_violation(const DNet& sigma);

/// All (k+1)^(n^2-n) ideal matrices with full diagonal, sorted.
std::vector<DNet> enumerate_dnet_candidates(std::size_t n, std::uint32_t k);

/// Lattice side to ideal side: sigma_ij is the exponent a with
/// tau_ji = p^a e_i. Throws ConsistencyError when an entry is not of that form.
DNet bridge(const GaloisContext& ctx, const NetCollection& tau);

/// Inverse of bridge.
NetCollection bridge_back(const GaloisContext& ctx, const DNet& sigma);

/// Invertible matrices with off-diagonal entry (i, j) in sigma_ij.
bool in_net(const Ring& ring, const DNet& sigma, const Matrix& m);
Bitset net_matrix_mask(const Ambient& g, const DNet& sigma);

/// G(sigma). Throws ConsistencyError when the matrix set is not a group.
Subgroup net_subgroup(const Ambient& g, const DNet& sigma);

/// First pair (a, b) from `pool` whose members lie in the net but whose
/// product does not.
std::optional<std::pair<Matrix, Matrix>> net_product_escape(const Ring& ring, const DNet& sigma,
                                                            std::span<const Matrix> pool);

/// Identity plus xi in the off-diagonal slot that the H_ij membership
/// predicate accepts, with x the submodule p^v(xi) e_j. Throws
/// ConsistencyError when neither or both slots are accepted.
Matrix elementary_transvection(const GaloisContext& ctx, std::size_t i, std::size_t j, std::uint32_t xi);

/// Candidates, their validity and net subgroups, tied to the net catalog.
class DNetCatalog {
 public:
  struct Entry {
    DNet sigma;
    bool valid = false;
    std::optional<std::array<std::size_t, 3>> violation;
    /// Index into NetCatalog::nets() of bridge_back(sigma), valid entries only.
    std::optional<std::size_t> net;
  };

  explicit DNetCatalog(const NetCatalog& catalog);

  const NetCatalog& nets() const noexcept { return *catalog_; }
  const std::vector<Entry>& entries() const noexcept { return entries_; }
  std::size_t valid_count() const noexcept { return valid_; }
  std::optional<std::size_t> find(const DNet& sigma) const;
  /// G(sigma) for a valid entry; equals the fixer of K under the bridge.
  const Subgroup& group(std::size_t entry) const;
  /// Whether every valid D-net bridged to a valid net collection with equal
  /// fixer and the counts agree.
  bool bridge_consistent() const noexcept { return consistent_; }

 private:
  const NetCatalog* catalog_;
  std::vector<Entry> entries_;
  std::size_t valid_ = 0;
  bool consistent_ = true;
};

struct SandwichVerification {
  DNet sigma;
  std::size_t net_order = 0;
  std::size_t f_order = 0;
  std::size_t normalizer_order = 0;
  std::vector<CheckRecord> checks;
};

/// sigma(F) as a D-net, G(sigma) = G(K), G(sigma) <= F <= N(sigma), and
/// uniqueness of the D-net and of the class of equivalent sublattices.
/// `main` must come from verify_main_theorems on the same F.
SandwichVerification verify_sandwich(const DNetCatalog& dnets, const Subgroup& f,
                                     const SubgroupVerification& main);

/// Runs verify_main_theorems first.
SandwichVerification verify_sandwich(const DNetCatalog& dnets, const Subgroup& f,
                                     const TheoremOptions& options = {});

nlohmann::json dnet_to_json(const DNet& sigma);

}  // namespace netgalois
