#include "netgalois/glnr.hpp"

#include <algorithm>

#include "netgalois/error.hpp"

namespace netgalois {

using nlohmann::json;

std::optional<std::array<std::size_t, 3>> dnet_law_violation(const DNet& s) {
  for (std::size_t i = 0; i < s.n; ++i)
    for (std::size_t r = 0; r < s.n; ++r)
      for (std::size_t j = 0; j < s.n; ++j)
        if (std::min(s.k, s(i, r) + s(r, j)) < s(i, j)) return std::array{i, r, j};
  return std::nullopt;
}

bool is_dnet(const DNet& s) {
  for (std::size_t i = 0; i < s.n; ++i)
    if (s(i, i) != 0) return false;
  for (auto a : s.exp)
    if (a > s.k) return false;
  return !dnet_law_violation(s);
}

std::vector<DNet> enumerate_dnet_candidates(std::size_t n, std::uint32_t k) {
  std::vector<std::size_t> slots;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) slots.push_back(i * n + j);
  std::vector<DNet> out;
  DNet cur(n, k, 0);
  while (true) {
    out.push_back(cur);
    std::size_t s = slots.size();
    while (s > 0) {
      --s;
      if (++cur.exp[slots[s]] <= k) break;
      cur.exp[slots[s]] = 0;
      if (s == 0) {
        std::sort(out.begin(), out.end());
        return out;
      }
    }
    if (slots.empty()) return out;
  }
}

namespace {

Elem scaled_atom(const GaloisContext& ctx, std::size_t j, std::uint32_t a) {
  const Ring& r = ctx.ring();
  if (a >= r.k()) return ctx.lattice().bottom();
  Vec v{};
  v[j] = r.pow_p(a);
  return ctx.modules().element_of({v});
}

}  // namespace

DNet bridge(const GaloisContext& ctx, const NetCollection& tau) {
  const std::size_t n = ctx.n();
  const std::uint32_t k = ctx.ring().k();
  DNet out(n, k, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const Elem x = tau(j, i);
      const std::size_t len = ctx.modules().length(x);
      if (len > k || scaled_atom(ctx, i, k - static_cast<std::uint32_t>(len)) != x)
        throw ConsistencyError("net entry " + ctx.lattice().label(x) + " is not an ideal multiple of a coordinate");
      out(i, j) = k - static_cast<std::uint32_t>(len);
    }
  }
  return out;
}

NetCollection bridge_back(const GaloisContext& ctx, const DNet& sigma) {
  const std::size_t n = ctx.n();
  if (sigma.n != n || sigma.k != ctx.ring().k()) throw InputError("D-net does not match the instance");
  NetCollection tau(n, ctx.lattice().bottom());
  for (std::size_t i = 0; i < n; ++i) {
    tau(i, i) = ctx.frame().atom(i);
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) tau(i, j) = scaled_atom(ctx, j, sigma(j, i));
  }
  return tau;
}

bool in_net(const Ring& ring, const DNet& sigma, const Matrix& m) {
  for (std::size_t i = 0; i < sigma.n; ++i)
    for (std::size_t j = 0; j < sigma.n; ++j)
      if (i != j && ring.valuation(m(i, j)) < sigma(i, j)) return false;
  return is_invertible(ring, m);
}

Bitset net_matrix_mask(const Ambient& g, const DNet& sigma) {
  const Ring& ring = g.ring();
  Bitset mask(g.size());
  for (GIndex a = 0; a < g.size(); ++a) {
    bool ok = true;
    for (std::size_t i = 0; i < sigma.n && ok; ++i)
      for (std::size_t j = 0; j < sigma.n && ok; ++j)
        if (i != j && ring.valuation(g.entry(a, i, j)) < sigma(i, j)) ok = false;
    if (ok) mask.set(a);
  }
  return mask;
}

Subgroup net_subgroup(const Ambient& g, const DNet& sigma) {
  return subgroup_from_mask(g, net_matrix_mask(g, sigma));
}

std::optional<std::pair<Matrix, Matrix>> net_product_escape(const Ring& ring, const DNet& sigma,
                                                            std::span<const Matrix> pool) {
  std::vector<const Matrix*> members;
  for (const auto& m : pool)
    if (in_net(ring, sigma, m)) members.push_back(&m);
  for (const Matrix* a : members)
    for (const Matrix* b : members)
      if (!in_net(ring, sigma, multiply(ring, *a, *b))) return std::pair{*a, *b};
  return std::nullopt;
}

Matrix elementary_transvection(const GaloisContext& ctx, std::size_t i, std::size_t j, std::uint32_t xi) {
  const std::size_t n = ctx.n();
  if (i == j || i >= n || j >= n) throw InputError("elementary transvection needs distinct indices");
  const Ring& ring = ctx.ring();
  xi %= ring.modulus();
  Matrix id = identity_matrix(n);
  if (xi == 0) return id;
  const Elem x = scaled_atom(ctx, j, ring.valuation(xi));
  Matrix a = id, b = id;
  a(j, i) = xi;
  b(i, j) = xi;
  const Ambient& g = ctx.group();
  const bool in_a = ctx.is_transvection(g.index_of(a), i, j, x);
  const bool in_b = ctx.is_transvection(g.index_of(b), i, j, x);
  if (in_a == in_b) throw ConsistencyError("transvection slot convention is ambiguous");
  return in_a ? a : b;
}

DNetCatalog::DNetCatalog(const NetCatalog& catalog) : catalog_(&catalog) {
  const GaloisContext& ctx = catalog.context();
  for (auto& sigma : enumerate_dnet_candidates(ctx.n(), ctx.ring().k())) {
    Entry e;
    e.violation = dnet_law_violation(sigma);
    e.valid = is_dnet(sigma);
    if (e.valid) {
      ++valid_;
      e.net = catalog.find(bridge_back(ctx, sigma));
      if (!e.net || !(net_matrix_mask(ctx.group(), sigma) == catalog.nets()[*e.net].group.mask)) consistent_ = false;
    }
    e.sigma = std::move(sigma);
    entries_.push_back(std::move(e));
  }
  if (valid_ != catalog.nets().size()) consistent_ = false;
}

std::optional<std::size_t> DNetCatalog::find(const DNet& sigma) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), sigma,
                             [](const Entry& e, const DNet& s) { return e.sigma < s; });
  if (it == entries_.end() || !(it->sigma == sigma)) return std::nullopt;
  return static_cast<std::size_t>(it - entries_.begin());
}

const Subgroup& DNetCatalog::group(std::size_t entry) const {
  const Entry& e = entries_.at(entry);
  if (!e.net) throw ConsistencyError("D-net has no matching net collection");
  return catalog_->nets()[*e.net].group;
}

SandwichVerification verify_sandwich(const DNetCatalog& dnets, const Subgroup& f, const SubgroupVerification& main) {
  const NetCatalog& catalog = dnets.nets();
  const GaloisContext& ctx = catalog.context();
  const Ambient& g = ctx.group();
  SandwichVerification out;
  out.f_order = f.order();
  auto& checks = out.checks;

  std::optional<std::size_t> entry;
  bool bridged = true;
  try {
    out.sigma = bridge(ctx, main.sigma);
  } catch (const ConsistencyError& e) {
    bridged = false;
    CheckRecord r;
    r.id = "sigma_is_dnet";
    r.holds = false;
    r.detail = json{{"error", e.what()}};
    checks.push_back(std::move(r));
  }
  if (bridged) {
    entry = dnets.find(out.sigma);
    CheckRecord law;
    law.id = "sigma_is_dnet";
    law.holds = is_dnet(out.sigma);
    law.detail = json{{"sigma", dnet_to_json(out.sigma)["sigma"]}};
    if (auto v = dnet_law_violation(out.sigma)) law.witness = json{{"i", (*v)[0]}, {"r", (*v)[1]}, {"j", (*v)[2]}};
    checks.push_back(std::move(law));

    CheckRecord rt;
    rt.id = "bridge_round_trip";
    rt.holds = bridge_back(ctx, out.sigma) == main.sigma;
    checks.push_back(std::move(rt));
  }

  const bool known = entry && dnets.entries()[*entry].net;
  Subgroup net_group;
  if (bridged) net_group = known ? dnets.group(*entry) : net_subgroup(g, out.sigma);
  out.net_order = net_group.order();

  CheckRecord eq;
  eq.id = "net_subgroup_is_K_fixer";
  eq.holds = bridged && net_group == main.k_fixer;
  checks.push_back(std::move(eq));

  CheckRecord below;
  below.id = "net_subgroup_in_F";
  below.holds = bridged && is_subgroup_of(net_group, f);
  checks.push_back(std::move(below));

  CheckRecord above = timed([&] {
    CheckRecord r;
    r.id = "F_in_net_normalizer";
    if (known) {
      const Subgroup& nz = catalog.normalizer(*dnets.entries()[*entry].net);
      out.normalizer_order = nz.order();
      r.holds = f.mask.is_subset_of(nz.mask);
    } else {
      r.holds = bridged;
      for (GIndex a : f.generators) r.holds = r.holds && normalizes(g, a, net_group);
    }
    return r;
  });
  checks.push_back(std::move(above));

  checks.push_back(timed([&] {
    CheckRecord r;
    r.id = "dnet_unique";
    json found = json::array();
    std::size_t hits = 0;
    bool self = false;
    for (std::size_t e = 0; e < dnets.entries().size(); ++e) {
      const auto& cand = dnets.entries()[e];
      if (!cand.valid || !cand.net) continue;
      const Subgroup& s = dnets.group(e);
      if (!is_subgroup_of(s, f)) continue;
      bool normal = true;
      for (GIndex a : f.generators) normal = normal && normalizes(g, a, s);
      if (!normal) continue;
      ++hits;
      self = self || (entry && e == *entry);
      found.push_back(dnet_to_json(cand.sigma)["sigma"]);
    }
    r.holds = hits == 1 && self;
    r.detail = json{{"candidates", dnets.entries().size()}, {"valid", dnets.valid_count()}, {"sandwiching", found}};
    return r;
  }));

  for (const auto& c : main.checks) {
    if (c.id != "normal_class_unique") continue;
    CheckRecord r = c;
    r.id = "class_unique";
    checks.push_back(std::move(r));
  }

  CheckRecord orders;
  orders.id = "orders";
  orders.holds = true;
  orders.detail = json{{"net_subgroup", out.net_order}, {"F", out.f_order}, {"normalizer", out.normalizer_order}};
  checks.push_back(std::move(orders));
  return out;
}

SandwichVerification verify_sandwich(const DNetCatalog& dnets, const Subgroup& f, const TheoremOptions& options) {
  return verify_sandwich(dnets, f, verify_main_theorems(dnets.nets(), f, options));
}

json dnet_to_json(const DNet& sigma) {
  json rows = json::array();
  for (std::size_t i = 0; i < sigma.n; ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < sigma.n; ++j) row.push_back(sigma(i, j));
    rows.push_back(row);
  }
  return json{{"sigma", rows}};
}

}  // namespace netgalois
