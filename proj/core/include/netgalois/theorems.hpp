#pragma once

#include <cstdint>
#include <vector>

#include "netgalois/nets.hpp"
#include "netgalois/verdict.hpp"

namespace netgalois {

struct TheoremOptions {
  /// Conjugation pairs (f, g) are checked exhaustively up to this many,
  /// sampled above it.
  std::size_t exhaustive_pair_limit = 20'000'000;
  std::size_t sampled_pairs = 10'000;
  std::uint64_t seed = 1;
  TransvectionMode mode = TransvectionMode::Auto;
};

/// Everything derived from one intermediate subgroup H <= F <= G.
struct SubgroupVerification {
  NetCollection sigma;
  SublatticeHandle k;
  Subgroup k_fixer;  // G(K)
  SublatticeHandle overline;
  std::size_t index = 0;
  std::vector<CheckRecord> checks;
};

/// Checks for one F: sigma(F) is a net collection, G(K) <= F, G(K) normal in
/// F (by generators and by conjugation pairs), F <= N(G(K)), the index
/// (F : G(K)), uniqueness of the net among the catalog, equal transvections
/// of G(K) and F, the overline(L_0(F)) statements, the class of K being the
/// only class of sublattices of L_0' with normal fixer, and in the m = 1 case
/// the uniqueness of K among sublattices of L_0 containing 0 and 1.
/// Throws InputError unless H <= F.
SubgroupVerification verify_main_theorems(const NetCatalog& catalog, const Subgroup& f,
                                          const TheoremOptions& options = {});

/// Instance-wide checks: inverse closure and join identities of
/// transvections, G(L̄_0) = H_ij(0), transvections normalizing G(M) fix M
/// for sublattices M of L̄_0, Galois closure identities, and injectivity of
/// tau -> G(K_tau) and tau -> L_0'(tau).
std::vector<CheckRecord> verify_instance_statements(const NetCatalog& catalog,
                                                    std::size_t sublattice_bound = 32);

/// Per-net checks: clause 4) in both readings, G(K_tau) equals the
/// transvection closure, sigma(G(K_tau)) = tau, and tau' of the closed
/// sublattice recovers G(K_tau).
std::vector<CheckRecord> verify_net(const NetCatalog& catalog, std::size_t net,
                                    TransvectionMode mode = TransvectionMode::Auto);

}  // namespace netgalois
