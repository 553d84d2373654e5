#include "netgalois/io.hpp"

#include <fstream>
#include <regex>
#include <sstream>

#include "netgalois/error.hpp"

namespace netgalois {

using nlohmann::json;

void check_version(const json& doc) {
  if (!doc.is_object()) throw InputError("expected a JSON object");
  if (!doc.contains("version")) return;
  const auto& v = doc.at("version");
  if (!v.is_number_integer() || v.get<int>() != kFormatVersion)
    throw InputError("unsupported format version " + v.dump());
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError("invalid JSON in " + path.string() + ": " + e.what());
  }
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

void write_json_file(const std::filesystem::path& path, const json& doc) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path.string());
  out << dump(doc);
}

InstanceSpec instance_from_json(const json& doc) {
  check_version(doc);
  try {
    const auto& r = doc.at("ring");
    const auto kind = r.at("kind").get<std::string>();
    const auto p = r.at("p").get<std::uint32_t>();
    const auto k = r.value("k", 1u);
    const auto n = doc.at("n").get<std::size_t>();
    if (kind == "prime_field") {
      if (k != 1) throw InputError("prime_field requires k = 1");
      return {Ring::prime_field(p), n};
    }
    if (kind == "chain") return {Ring::chain(p, k), n};
    throw InputError("unknown ring kind " + kind);
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed instance: ") + e.what());
  }
}

json instance_to_json(const InstanceSpec& spec) {
  const bool field = spec.ring.kind() == Ring::Kind::PrimeField;
  return {{"version", kFormatVersion},
          {"ring", {{"kind", field ? "prime_field" : "chain"}, {"p", spec.ring.p()}, {"k", spec.ring.k()}}},
          {"n", spec.n}};
}

InstanceSpec parse_instance_shorthand(const std::string& text) {
  static const std::regex re(R"(^(F|Z)(\d+)(?:\^(\d+))?:(\d+)$)");
  std::smatch m;
  if (!std::regex_match(text, m, re)) throw InputError("instance must look like F7:2, Z49:2 or Z7^2:2");
  const auto base = static_cast<std::uint32_t>(std::stoul(m[2]));
  const std::size_t n = std::stoul(m[4]);
  if (m[1] == "F") {
    if (m[3].matched) throw InputError("F takes a prime");
    return {Ring::prime_field(base), n};
  }
  if (m[3].matched) return {Ring::chain(base, static_cast<std::uint32_t>(std::stoul(m[3]))), n};
  // Z<q>: factor q = p^k
  std::uint32_t p = 2;
  while (p <= base && base % p != 0) ++p;
  if (p > base) throw InputError("Z needs a prime power modulus");
  std::uint32_t k = 0, q = base;
  while (q % p == 0) {
    q /= p;
    ++k;
  }
  if (q != 1) throw InputError("Z needs a prime power modulus");
  return {k == 1 ? Ring::prime_field(p) : Ring::chain(p, k), n};
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.n; ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.n; ++j) row.push_back(m(i, j));
    rows.push_back(row);
  }
  return rows;
}

Matrix matrix_from_json(const json& rows, const Ring& ring, std::size_t n) {
  if (!rows.is_array() || rows.size() != n) throw InputError("matrix must have " + std::to_string(n) + " rows");
  Matrix m;
  m.n = n;
  for (std::size_t i = 0; i < n; ++i) {
    if (!rows[i].is_array() || rows[i].size() != n) throw InputError("matrix rows must have length " + std::to_string(n));
    for (std::size_t j = 0; j < n; ++j) {
      if (!rows[i][j].is_number_integer()) throw InputError("matrix entries must be integers");
      const long long v = rows[i][j].get<long long>();
      const long long q = ring.modulus();
      m(i, j) = static_cast<std::uint32_t>(((v % q) + q) % q);
    }
  }
  return m;
}

GIndex element_from_json(const Ambient& g, const json& rows) {
  return g.index_of(matrix_from_json(rows, g.ring(), g.n()));
}

json element_json(const Ambient& g, GIndex a) { return matrix_to_json(g.matrix(a)); }

Subgroup subgroup_from_json(const GaloisContext& ctx, const json& doc) {
  check_version(doc);
  if (!doc.contains("generators") || !doc.at("generators").is_array())
    throw InputError("subgroup file needs a generators array");
  std::vector<GIndex> gens;
  for (const auto& rows : doc.at("generators")) gens.push_back(element_from_json(ctx.group(), rows));
  if (doc.value("with_H", false)) return extend_subgroup(ctx.group(), ctx.H(), gens, ctx.cap());
  return ctx.subgroup_of(gens);
}

json subgroup_to_json(const Ambient& g, const Subgroup& s) {
  json gens = json::array();
  for (GIndex a : s.generators) gens.push_back(element_json(g, a));
  return {{"version", kFormatVersion}, {"generators", gens}, {"order", s.order()}};
}

Elem element_by_label(const FiniteLattice& lattice, const std::string& label) {
  auto x = lattice.find(label);
  if (!x) throw InputError("no lattice element labelled " + label);
  return *x;
}

NetCollection net_from_json(const GaloisContext& ctx, const json& doc) {
  check_version(doc);
  const std::size_t n = ctx.n();
  try {
    const auto& rows = doc.at("tau");
    if (rows.size() != n) throw InputError("tau must have n rows");
    NetCollection tau(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (rows[i].size() != n) throw InputError("tau rows must have length n");
      for (std::size_t j = 0; j < n; ++j) tau(i, j) = element_by_label(ctx.lattice(), rows[i][j].get<std::string>());
    }
    return tau;
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed net: ") + e.what());
  }
}

json net_to_json(const FiniteLattice& lattice, const NetCollection& tau) {
  return {{"version", kFormatVersion}, {"tau", net_labels(lattice, tau)}};
}

DNet dnet_from_json(const json& doc, std::size_t n, std::uint32_t k) {
  check_version(doc);
  try {
    const auto& rows = doc.at("sigma");
    if (rows.size() != n) throw InputError("sigma must have n rows");
    DNet s(n, k, 0);
    for (std::size_t i = 0; i < n; ++i) {
      if (rows[i].size() != n) throw InputError("sigma rows must have length n");
      for (std::size_t j = 0; j < n; ++j) {
        const auto a = rows[i][j].get<std::uint32_t>();
        if (a > k) throw InputError("ideal exponent exceeds k");
        s(i, j) = a;
      }
    }
    return s;
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed D-net: ") + e.what());
  }
}

}  // namespace netgalois
