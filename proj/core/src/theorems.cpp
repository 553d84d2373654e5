#include "netgalois/theorems.hpp"

#include <algorithm>
#include <random>
#include <unordered_map>

#include "netgalois/error.hpp"

namespace netgalois {
namespace {

using nlohmann::json;

json labels_of(const FiniteLattice& l, std::span<const Elem> xs) {
  json a = json::array();
  for (Elem x : xs) a.push_back(l.label(x));
  return a;
}

CheckRecord record(std::string id, bool holds, json detail = nullptr, json witness = nullptr) {
  CheckRecord r;
  r.id = std::move(id);
  r.holds = holds;
  r.detail = std::move(detail);
  r.witness = std::move(witness);
  return r;
}

// Members of H_ij(x) ∩ F over all i != j, x <= e_j.
std::vector<GIndex> transvections_in(const GaloisContext& ctx, const Subgroup& f, TransvectionMode mode) {
  std::vector<GIndex> out;
  for (GIndex t : ctx.all_transvections(mode))
    if (f.contains(t)) out.push_back(t);
  return out;
}

}  // namespace

SubgroupVerification verify_main_theorems(const NetCatalog& catalog, const Subgroup& f,
                                          const TheoremOptions& options) {
  const GaloisContext& ctx = catalog.context();
  const Ambient& g = ctx.group();
  const FiniteLattice& l = ctx.lattice();
  if (!is_subgroup_of(ctx.H(), f)) throw InputError("F must contain H");

  SubgroupVerification out;
  auto& checks = out.checks;

  out.sigma = sigma_of(ctx, f, options.mode);
  checks.push_back(timed([&] {
    bool ok = true;
    for (Elem x : out.sigma.tau) ok = ok && ctx.L0prime().contains(x);
    return record("sigma_entries_H_fixed", ok);
  }));
  checks.push_back(timed([&] {
    const NetCheck nc = is_net_collection(ctx, out.sigma, NetMode::Aggregate);
    json w = nullptr;
    if (nc.witness) w = json{{"g", *nc.witness}, {"clause", nc.clause}};
    return record("sigma_is_net", nc.valid, nullptr, w);
  }));
  checks.push_back(timed([&] {
    const NetCheck nc = is_net_collection(ctx, out.sigma, NetMode::PerTriple);
    json w = nullptr;
    if (nc.witness) w = json{{"g", *nc.witness}, {"triple", *nc.triple}};
    CheckRecord r = record("sigma_is_net_per_triple", nc.valid, nullptr, w);
    r.asserted = false;
    return r;
  }));

  out.k = K_of(ctx, out.sigma);
  const auto net_index = catalog.find(out.sigma);
  out.k_fixer = net_index ? catalog.nets()[*net_index].group : G_of_net(ctx, out.sigma);
  const Subgroup& gk = out.k_fixer;

  checks.push_back(record("K_fixer_in_F", is_subgroup_of(gk, f)));
  checks.push_back(timed([&] { return record("K_fixer_normal", is_normal_in(g, gk, f)); }));
  checks.push_back(timed([&] {
    const std::uint64_t pairs = static_cast<std::uint64_t>(f.order()) * gk.order();
    json w = nullptr;
    std::uint64_t checked = 0;
    auto test = [&](GIndex a, GIndex b) {
      ++checked;
      if (!gk.contains(g.conj(g.inv(a), b))) {
        w = json{{"f", a}, {"g", b}};
        return false;
      }
      return true;
    };
    bool ok = true;
    const bool exhaustive = pairs <= options.exhaustive_pair_limit;
    if (exhaustive) {
      for (GIndex a : f.members) {
        for (GIndex b : gk.members)
          if (!(ok = test(a, b))) break;
        if (!ok) break;
      }
    } else {
      std::mt19937_64 rng(options.seed);
      for (std::size_t s = 0; s < options.sampled_pairs && ok; ++s) {
        const GIndex a = f.members[rng() % f.order()];
        const GIndex b = gk.members[rng() % gk.order()];
        ok = test(a, b);
      }
    }
    json d{{"mode", exhaustive ? "exhaustive" : "sampled"}, {"pairs", checked}};
    if (!exhaustive) d["seed"] = options.seed;
    return record("K_fixer_conjugation_pairs", ok, d, w);
  }));
  checks.push_back(timed([&] {
    bool ok;
    if (net_index) {
      ok = f.mask.is_subset_of(catalog.normalizer(*net_index).mask);
    } else {
      ok = true;
      for (GIndex a : f.generators) ok = ok && normalizes(g, a, gk);
    }
    return record("F_in_normalizer", ok);
  }));
  {
    const bool divides = gk.order() > 0 && f.order() % gk.order() == 0;
    out.index = divides ? f.order() / gk.order() : 0;
    checks.push_back(record("finite_index", divides,
                            json{{"F_order", f.order()}, {"K_fixer_order", gk.order()}, {"index", out.index}}));
  }
  checks.push_back(timed([&] {
    std::vector<std::size_t> sandwiching;
    for (std::size_t t = 0; t < catalog.nets().size(); ++t) {
      const Subgroup& s = catalog.nets()[t].group;
      if (!is_subgroup_of(s, f)) continue;
      bool normal = true;
      for (GIndex a : f.generators) normal = normal && normalizes(g, a, s);
      if (normal) sandwiching.push_back(t);
    }
    const bool ok = sandwiching.size() == 1 && net_index && sandwiching.front() == *net_index;
    json nets = json::array();
    for (auto t : sandwiching) nets.push_back(net_labels(l, catalog.nets()[t].tau));
    return record("net_unique", ok, json{{"candidates", catalog.nets().size()}, {"sandwiching", nets}});
  }));
  checks.push_back(timed([&] {
    const auto diff = ctx.transvection_difference(gk, f, options.mode);
    return record("same_transvections", !diff, nullptr, diff ? json{{"t", *diff}} : json(nullptr));
  }));
  checks.push_back(timed([&] {
    const auto ts = transvections_in(ctx, f, options.mode);
    const Subgroup gen = extend_subgroup(g, ctx.H(), ts, ctx.cap());
    return record("K_fixer_transvection_generated", gen == gk, json{{"generated_order", gen.order()}});
  }));

  out.overline = overline_L0_of(ctx, f);
  const auto sums = row_sums(ctx, out.sigma);
  checks.push_back([&] {
    bool ok = true;
    for (Elem s : sums) ok = ok && out.overline.contains(s);
    return record("row_sums_in_overline", ok, json{{"row_sums", labels_of(l, sums)}});
  }());
  checks.push_back(record("K_in_overline", out.k.is_subset_of(out.overline),
                          json{{"K", labels_of(l, out.k.members())}, {"overline", labels_of(l, out.overline.members())}}));
  const Subgroup g_over = fixer(g, out.overline.members());
  checks.push_back(record("overline_fixer_in_K_fixer", is_subgroup_of(g_over, gk)));
  checks.push_back(record("overline_fixer_in_F", is_subgroup_of(g_over, f)));
  checks.push_back(timed([&] { return record("overline_fixer_normal", is_normal_in(g, g_over, f)); }));
  checks.push_back(timed([&] {
    const auto diff = ctx.transvection_difference(g_over, f, options.mode);
    return record("overline_same_transvections", !diff, nullptr, diff ? json{{"t", *diff}} : json(nullptr));
  }));

  if (catalog.has_classes()) {
    checks.push_back(timed([&] {
      std::vector<std::size_t> normal;
      for (std::size_t c = 0; c < catalog.classes().size(); ++c)
        if (is_normal_in(g, catalog.classes()[c].common_fixer, f)) normal.push_back(c);
      const std::size_t k_class = catalog.class_of(out.k);
      const bool ok = normal.size() == 1 && normal.front() == k_class;
      return record("normal_class_unique", ok,
                    json{{"classes", catalog.classes().size()}, {"normal_classes", normal}, {"K_class", k_class}});
    }));
  }

  if (ctx.frame().m() == 1) {
    checks.push_back(timed([&] {
      const auto subs = enumerate_sublattices(ctx.L0());
      std::vector<SublatticeHandle> normal;
      for (const auto& s : subs) {
        if (!s.contains(l.bottom()) || !s.contains(l.top())) continue;
        if (is_normal_in(g, fixer(g, s.members()), f)) normal.push_back(s);
      }
      const bool ok = normal.size() == 1 && normal.front() == out.k && out.k == out.overline;
      json found = json::array();
      for (const auto& s : normal) found.push_back(labels_of(l, s.members()));
      return record("boolean_case_unique", ok, json{{"normal_sublattices", found}});
    }));
  }
  return out;
}

std::vector<CheckRecord> verify_instance_statements(const NetCatalog& catalog, std::size_t sublattice_bound) {
  const GaloisContext& ctx = catalog.context();
  const Ambient& g = ctx.group();
  const FiniteLattice& l = ctx.lattice();
  const Frame& frame = ctx.frame();
  const std::size_t n = ctx.n();
  std::vector<CheckRecord> out;

  out.push_back(timed([&] {
    json w = nullptr;
    for (std::size_t i = 0; i < n && w.is_null(); ++i) {
      for (std::size_t j = 0; j < n && w.is_null(); ++j) {
        if (i == j) continue;
        for (Elem x : frame.below_atom(j)) {
          const auto& ms = ctx.transvection_members(i, j, x);
          for (GIndex t : ms) {
            if (!std::binary_search(ms.begin(), ms.end(), g.inv(t))) {
              w = json{{"t", t}, {"i", i}, {"j", j}, {"x", l.label(x)}};
              break;
            }
          }
          if (!w.is_null()) break;
        }
      }
    }
    return record("transvection_inverse_closed", w.is_null(), nullptr, w);
  }));

  out.push_back(timed([&] {
    json w = nullptr;
    std::size_t checked = 0;
    for (std::size_t i = 0; i < n && w.is_null(); ++i) {
      for (std::size_t j = 0; j < n && w.is_null(); ++j) {
        if (i == j) continue;
        const Elem ei = frame.atom(i);
        for (Elem x : frame.below_atom(j)) {
          for (GIndex t : ctx.transvection_members(i, j, x)) {
            ++checked;
            const Elem te = g.act(t, ei);
            const Elem rhs = l.join(ei, x);
            if (l.join(te, ei) != rhs || l.join(te, x) != rhs) {
              w = json{{"t", t}, {"i", i}, {"j", j}, {"x", l.label(x)}};
              break;
            }
          }
          if (!w.is_null()) break;
        }
      }
    }
    return record("transvection_join_identities", w.is_null(), json{{"checked", checked}}, w);
  }));

  out.push_back(timed([&] {
    bool ok = true;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) ok = ok && ctx.transvection_members(i, j, l.bottom()) == ctx.G_lbar0().members;
    return record("lbar0_fixer_is_zero_transvections", ok, json{{"order", ctx.G_lbar0().order()}});
  }));

  out.push_back(timed([&] {
    const auto subs = enumerate_sublattices(ctx.lbar0(), sublattice_bound);
    std::unordered_map<Bitset, Subgroup, BitsetHash> fixers;
    const auto& ts = ctx.all_transvections();
    json w = nullptr;
    std::size_t checked = 0;
    for (const auto& m : subs) {
      Bitset mask = fixer_mask(g, m.members());
      auto it = fixers.find(mask);
      if (it == fixers.end()) it = fixers.emplace(mask, subgroup_from_mask(g, mask)).first;
      const Subgroup& gm = it->second;
      for (GIndex t : ts) {
        ++checked;
        if (normalizes(g, t, gm) && !gm.contains(t)) {
          w = json{{"t", t}, {"M", labels_of(l, m.members())}};
          break;
        }
      }
      if (!w.is_null()) break;
    }
    return record("normalizing_transvections_fix", w.is_null(),
                  json{{"sublattices", subs.size()}, {"checked", checked}}, w);
  }));

  if (catalog.has_classes()) {
    out.push_back(timed([&] {
      bool ok = true;
      json w = nullptr;
      for (std::size_t c = 0; c < catalog.classes().size() && ok; ++c) {
        const EquivClass& cls = catalog.classes()[c];
        // phi psi phi = phi
        if (!(fixer(g, cls.closure.members()) == cls.common_fixer)) {
          ok = false;
          w = json{{"class", c}};
        }
        for (const auto& m : cls.members) {
          if (!m.is_subset_of(cls.closure)) {
            ok = false;
            w = json{{"class", c}, {"M", labels_of(l, m.members())}};
          }
        }
      }
      std::vector<const Subgroup*> groups{&ctx.H(), &ctx.G()};
      for (const auto& e : catalog.nets()) groups.push_back(&e.group);
      for (const Subgroup* s : groups) {
        // psi phi psi = psi
        const SublatticeHandle p = ctx.galois_psi(*s);
        if (!(ctx.galois_psi(fixer(g, p.members())) == p)) {
          ok = false;
          w = json{{"group_order", s->order()}};
        }
      }
      return record("galois_closure_identities", ok, nullptr, w);
    }));
  }

  out.push_back(timed([&] {
    const auto& nets = catalog.nets();
    bool ok = true;
    for (std::size_t a = 0; a < nets.size(); ++a) {
      for (std::size_t b = a + 1; b < nets.size(); ++b) {
        if (nets[a].group == nets[b].group || nets[a].closed == nets[b].closed) ok = false;
      }
    }
    json d{{"nets", nets.size()}};
    if (catalog.has_classes()) {
      d["classes"] = catalog.classes().size();
      ok = ok && catalog.classes().size() == nets.size();
    }
    return record("closed_objects_bijective", ok, d);
  }));
  return out;
}

std::vector<CheckRecord> verify_net(const NetCatalog& catalog, std::size_t net, TransvectionMode mode) {
  const GaloisContext& ctx = catalog.context();
  const auto& entry = catalog.nets().at(net);
  std::vector<CheckRecord> out;
  out.push_back(timed([&] {
    const NetCheck nc = is_net_collection(ctx, entry.tau, NetMode::Aggregate);
    return record("net_clause4_aggregate", nc.valid, nullptr, nc.witness ? json{{"g", *nc.witness}} : json(nullptr));
  }));
  out.push_back(timed([&] {
    const NetCheck nc = is_net_collection(ctx, entry.tau, NetMode::PerTriple);
    CheckRecord r = record("net_clause4_per_triple", nc.valid, nullptr,
                           nc.witness ? json{{"g", *nc.witness}, {"triple", *nc.triple}} : json(nullptr));
    r.asserted = false;
    return r;
  }));
  out.push_back(timed([&] {
    const Subgroup v = transvection_closure(ctx, entry.tau, mode);
    return record("fixer_generated_by_transvections", v == entry.group,
                  json{{"fixer_order", entry.group.order()}, {"generated_order", v.order()}});
  }));
  out.push_back(timed([&] {
    const NetCollection s = sigma_of(ctx, entry.group, mode);
    return record("sigma_recovers_net", s == entry.tau, json{{"sigma", net_labels(ctx.lattice(), s)}});
  }));
  if (entry.closed.is_subset_of(ctx.lbar0())) {
    out.push_back(timed([&] {
      const NetCollection tp = tau_net_of_sublattice(ctx, entry.closed);
      const Subgroup gk = G_of_net(ctx, tp);
      return record("tau_prime_recovers_fixer", gk == entry.group,
                    json{{"tau_prime", net_labels(ctx.lattice(), tp)}});
    }));
  }
  return out;
}

}  // namespace netgalois
