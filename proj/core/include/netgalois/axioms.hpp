#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "netgalois/galois.hpp"
#include "netgalois/verdict.hpp"

namespace netgalois {

/// Which elements of G feed the universally quantified variables.
///  - Exhaustive: all of G (refused above kExhaustiveRefuse).
///  - Sampled: `samples` draws from a seeded generator.
///  - Auto: exhaustive when |G| <= exhaustive_limit.
enum class PoolMode { Auto, Exhaustive, Sampled };

inline constexpr std::size_t kExhaustiveRefuse = 100000;

const char* to_string(PoolMode mode);

struct AxiomOptions {
  PoolMode pool = PoolMode::Auto;
  std::size_t exhaustive_limit = 10000;
  std::size_t samples = 200;
  /// Elements a for which <a, H> is closed in sampled mode.
  std::size_t closure_samples = 8;
  /// Families of transvections tried when generating subgroups; all of them
  /// up to this many subsets, a seeded sample above.
  std::size_t subset_limit = 4096;
  std::uint64_t seed = 1;
  TransvectionMode mode = TransvectionMode::Auto;
  std::size_t jobs = 1;
  /// Forces every record to report-only. Instances with residue field of
  /// fewer than 7 elements are always report-only.
  bool report_only = false;
};

/// "c1".."c12", plus "m1".."m4" when the atoms have dimension 1.
std::vector<std::string> all_condition_ids(const GaloisContext& ctx);

/// Parses "1-12", "7-10,12", "m1-m4", "all" into condition ids.
std::vector<std::string> parse_condition_selection(std::string_view text, const GaloisContext& ctx);

/// Short description of a condition id.
std::string condition_name(std::string_view id);

bool is_report_only_instance(const GaloisContext& ctx);

/// One or more records per id: "c4" and "c11" give ".weak" and ".strong"
/// readings, "c9" adds "c9.consequence". Strong readings are report-only.
/// Records come back in the order of `ids`, independent of `jobs`.
std::vector<CheckRecord> check_conditions(const GaloisContext& ctx, const std::vector<std::string>& ids,
                                          const AxiomOptions& options = {});

struct ReplayResult {
  /// The witness still refutes the condition.
  bool reproduced = false;
  std::string detail;
};

/// Re-evaluates a record id ("c6", "c4.weak", ...) at a witness.
ReplayResult replay_condition(const GaloisContext& ctx, std::string_view id, const nlohmann::json& witness,
                              TransvectionMode mode = TransvectionMode::Auto);

}  // namespace netgalois
