#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "netgalois/axioms.hpp"
#include "netgalois/glnr.hpp"
#include "netgalois/io.hpp"
#include "netgalois/theorems.hpp"

namespace netgalois {

struct ReportOptions {
  std::size_t jobs = 1;
  std::uint64_t seed = 1;
  /// Adds elapsed seconds to every record; off by default so reports are
  /// byte-stable.
  bool timings = false;
  bool report_only = false;
  TransvectionMode mode = TransvectionMode::Auto;
  AxiomOptions axioms;
  TheoremOptions theorems;
  /// Random samples for the support identities.
  std::size_t identity_samples = 1000;
};

/// A finished report: JSON document, overall verdict and a short
/// human-readable summary.
struct Report {
  nlohmann::json doc;
  bool ok = true;
  std::string summary;
};

/// Counts and structural checks: lattice laws, modularity, frame, group
/// orders.
Report build_report(const GaloisContext& ctx, const ReportOptions& options);

/// Support of one element, or the support identities over the instance.
Report support_report(const GaloisContext& ctx, std::optional<Elem> element, const ReportOptions& options);

Report axioms_report(const GaloisContext& ctx, const std::vector<std::string>& ids, const ReportOptions& options);

/// Candidate and valid net collections with per-net checks and the
/// instance-wide statements.
Report nets_report(const NetCatalog& catalog, const ReportOptions& options);

/// Equivalence classes of sublattices of L_0'.
Report classes_report(const NetCatalog& catalog, const ReportOptions& options);

Report sigma_report(const NetCatalog& catalog, const Subgroup& f, const ReportOptions& options);

Report sandwich_report(const DNetCatalog& dnets, const Subgroup& f, const ReportOptions& options);

/// Elements g for the family F = <H, g>: all of G, or `sample` distinct
/// seeded draws in increasing order.
std::vector<GIndex> sweep_elements(const Ambient& g, std::optional<std::size_t> sample, std::uint64_t seed);

/// Main theorems and sandwich for F = <H, g> over the given elements.
/// Distinct subgroups are verified once.
Report sweep_report(const DNetCatalog& dnets, std::span<const GIndex> elements, const ReportOptions& options);

/// Fixed negative fixtures: the pentagon, an ideal matrix breaking the
/// product law for n = 3, and the report-only run on F_2.
Report negative_controls_report(const ReportOptions& options);

/// The ideal matrix with (0,1) and (1,2) full, (0,2) zero, all else full.
DNet broken_product_fixture(std::uint32_t k);

}  // namespace netgalois
