#pragma once

#include <filesystem>
#include <memory>
#include <string>

#include <nlohmann/json.hpp>

#include "netgalois/glnr.hpp"

namespace netgalois {

/// Every artifact carries "version": 1; a missing field reads as 1.
inline constexpr int kFormatVersion = 1;
inline constexpr const char* kToolVersion = "netgalois 0.1.0";

/// Throws InputError on an unknown version.
void check_version(const nlohmann::json& doc);

nlohmann::json read_json_file(const std::filesystem::path& path);
/// Pretty-printed with two-space indent and a trailing newline.
void write_json_file(const std::filesystem::path& path, const nlohmann::json& doc);
std::string dump(const nlohmann::json& doc);

struct InstanceSpec {
  Ring ring;
  std::size_t n = 2;
};

/// {"ring": {"kind": "prime_field"|"chain", "p": 7, "k": 1}, "n": 2}
InstanceSpec instance_from_json(const nlohmann::json& doc);
nlohmann::json instance_to_json(const InstanceSpec& spec);
/// Short forms "F7:2" or "Z49:2" as used on the command line.
InstanceSpec parse_instance_shorthand(const std::string& text);

nlohmann::json matrix_to_json(const Matrix& m);
/// Entries are reduced modulo the ring modulus.
Matrix matrix_from_json(const nlohmann::json& rows, const Ring& ring, std::size_t n);

/// {"generators": [matrix, ...], "with_H": bool}. With "with_H" the
/// generators of H are added before closing.
Subgroup subgroup_from_json(const GaloisContext& ctx, const nlohmann::json& doc);
nlohmann::json subgroup_to_json(const Ambient& g, const Subgroup& s);

/// {"tau": [[label, ...], ...]}
NetCollection net_from_json(const GaloisContext& ctx, const nlohmann::json& doc);
nlohmann::json net_to_json(const FiniteLattice& lattice, const NetCollection& tau);

/// {"sigma": [[a_ij]]}
DNet dnet_from_json(const nlohmann::json& doc, std::size_t n, std::uint32_t k);

/// Group element as a matrix, for witnesses.
nlohmann::json element_json(const Ambient& g, GIndex a);
GIndex element_from_json(const Ambient& g, const nlohmann::json& rows);

/// Element by label; throws InputError on a miss.
Elem element_by_label(const FiniteLattice& lattice, const std::string& label);

}  // namespace netgalois
