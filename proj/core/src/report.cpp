#include "netgalois/report.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

#include "netgalois/error.hpp"
#include "netgalois/parallel.hpp"

namespace netgalois {

using nlohmann::json;

namespace {

json labels_of(const FiniteLattice& l, std::span<const Elem> xs) {
  json a = json::array();
  for (Elem x : xs) a.push_back(l.label(x));
  return a;
}

json header(const char* command, const GaloisContext* ctx, const ReportOptions& o) {
  json doc{{"version", kFormatVersion}, {"tool", kToolVersion}, {"command", command}};
  if (ctx) doc["instance"] = instance_to_json({ctx->ring(), ctx->n()});
  doc["seed"] = o.seed;
  return doc;
}

CheckRecord rec(std::string id, bool holds, json detail = nullptr, json witness = nullptr) {
  CheckRecord r;
  r.id = std::move(id);
  r.holds = holds;
  r.detail = std::move(detail);
  r.witness = std::move(witness);
  return r;
}

bool report_only(const GaloisContext* ctx, const ReportOptions& o) {
  return o.report_only || (ctx && is_report_only_instance(*ctx));
}

json records_json(const std::vector<CheckRecord>& recs, bool timings) {
  json a = json::array();
  for (const auto& r : recs) a.push_back(to_json(r, timings));
  return a;
}

// Applies report-only, writes "checks", "ok", and the summary tally.
void finish(Report& rep, std::vector<CheckRecord>& recs, const GaloisContext* ctx, const ReportOptions& o) {
  if (report_only(ctx, o)) {
    unassert(recs);
    rep.doc["report_only"] = true;
  }
  rep.doc["checks"] = records_json(recs, o.timings);
  rep.ok = rep.ok && all_asserted_hold(recs);
  rep.doc["ok"] = rep.ok;
  std::size_t failed = 0, unasserted_failed = 0;
  for (const auto& r : recs) {
    if (r.holds) continue;
    (r.asserted ? failed : unasserted_failed)++;
  }
  std::ostringstream os;
  os << rep.doc.value("command", std::string()) << ": " << recs.size() << " checks, " << failed
     << " asserted failures";
  if (unasserted_failed) os << ", " << unasserted_failed << " report-only failures";
  os << (rep.ok ? " -> PASS" : " -> FAIL");
  for (const auto& r : recs)
    if (!r.holds) os << "\n  " << (r.asserted ? "FAIL " : "note ") << r.id;
  rep.summary = rep.summary.empty() ? os.str() : os.str() + "\n" + rep.summary;
}

}  // namespace

Report build_report(const GaloisContext& ctx, const ReportOptions& o) {
  Report rep;
  rep.doc = header("build", &ctx, o);
  const FiniteLattice& l = ctx.lattice();
  const Frame& frame = ctx.frame();
  json counts{{"lattice_elements", l.size()},
              {"m", frame.m()},
              {"L0", ctx.L0().size()},
              {"L0_prime", ctx.L0prime().size()},
              {"lbar0", frame.lbar0().size()},
              {"G", ctx.group().size()},
              {"H", ctx.H().order()},
              {"G_lbar0", ctx.G_lbar0().order()}};
  rep.doc["ring"] = ctx.ring().describe();
  rep.doc["counts"] = counts;
  rep.doc["atoms"] = labels_of(l, frame.atoms());
  rep.doc["L0_prime"] = labels_of(l, ctx.L0prime().members());

  std::vector<CheckRecord> recs;
  {
    const auto v = lattice_law_violation(l, o.seed);
    recs.push_back(rec("lattice_laws", !v, nullptr, v ? json(*v) : json(nullptr)));
  }
  {
    const auto v = modularity_violation(l);
    json w = nullptr;
    if (v) w = json{{"x", l.label((*v)[0])}, {"y", l.label((*v)[1])}, {"z", l.label((*v)[2])}};
    recs.push_back(rec("modular", !v, nullptr, w));
  }
  {
    const auto b = is_boolean(ctx.L0());
    recs.push_back(rec("L0_boolean", b.is_boolean && b.atoms.size() == ctx.n(), json{{"atoms", b.atoms.size()}}));
  }
  recs.push_back(rec("group_order_formula",
                     ctx.group().size() == Ambient::general_linear_order(ctx.ring(), ctx.n()),
                     json{{"enumerated", ctx.group().size()},
                          {"formula", Ambient::general_linear_order(ctx.ring(), ctx.n())}}));
  {
    bool diagonal = true;
    for (GIndex h : ctx.H().members) {
      const Matrix m = ctx.group().matrix(h);
      for (std::size_t i = 0; i < ctx.n(); ++i)
        for (std::size_t j = 0; j < ctx.n(); ++j)
          if (i != j && m(i, j) != 0) diagonal = false;
    }
    std::size_t expected = 1;
    for (std::size_t i = 0; i < ctx.n(); ++i) expected *= ctx.ring().unit_count();
    recs.push_back(rec("H_is_diagonal", diagonal && ctx.H().order() == expected, json{{"order", ctx.H().order()}}));
  }
  {
    // L_0' consists of the sums of p^a e_i
    bool ok = ctx.L0prime().is_subset_of(ctx.lbar0());
    recs.push_back(rec("L0_prime_in_lbar0", ok, json{{"L0_prime", ctx.L0prime().size()}}));
  }
  std::ostringstream os;
  os << ctx.ring().describe() << " n=" << ctx.n() << ": |L|=" << l.size() << " m=" << frame.m()
     << " |L0'|=" << ctx.L0prime().size() << " |G|=" << ctx.group().size() << " |H|=" << ctx.H().order();
  rep.summary = os.str();
  finish(rep, recs, &ctx, o);
  return rep;
}

Report support_report(const GaloisContext& ctx, std::optional<Elem> element, const ReportOptions& o) {
  Report rep;
  rep.doc = header("support", &ctx, o);
  const FiniteLattice& l = ctx.lattice();
  const Frame& frame = ctx.frame();
  const std::size_t n = ctx.n();
  const std::size_t size = l.size();
  std::vector<CheckRecord> recs;

  if (element) {
    const Collection c = frame.support(*element);
    rep.doc["element"] = l.label(*element);
    rep.doc["support"] = labels_of(l, c.parts);
    rep.doc["in_lbar0"] = frame.in_lbar0(*element);
    recs.push_back(rec("support_covers", l.leq(*element, frame.sum(c))));
    std::ostringstream os;
    os << "[" << l.label(*element) << "] = (";
    for (std::size_t i = 0; i < n; ++i) os << (i ? ", " : "") << l.label(c.parts[i]);
    os << ")";
    rep.summary = os.str();
    finish(rep, recs, &ctx, o);
    return rep;
  }

  std::mt19937_64 rng(o.seed);
  auto pick = [&] { return static_cast<Elem>(rng() % size); };

  recs.push_back(timed([&] {
    json w = nullptr;
    for (Elem x = 0; x < size && w.is_null(); ++x) {
      const Collection c = frame.support(x);
      bool ok = l.leq(x, frame.sum(c));
      for (std::size_t i = 0; i < n; ++i) ok = ok && l.leq(c.parts[i], frame.atom(i));
      if (!ok) w = json{{"x", l.label(x)}};
    }
    return rec("support_formula_covers", w.is_null(), json{{"elements", size}}, w);
  }));

  recs.push_back(timed([&] {
    const bool exhaustive = size <= 60;
    std::size_t checked = 0;
    json w = nullptr;
    auto test = [&](Elem x, Elem y) {
      ++checked;
      const Elem s = l.join(x, y);
      for (std::size_t i = 0; i < n; ++i)
        if (frame.support_part(s, i) != l.join(frame.support_part(x, i), frame.support_part(y, i))) {
          w = json{{"x", l.label(x)}, {"y", l.label(y)}};
          return false;
        }
      return true;
    };
    if (exhaustive) {
      for (Elem x = 0; x < size && w.is_null(); ++x)
        for (Elem y = 0; y < size; ++y)
          if (!test(x, y)) break;
    } else {
      for (std::size_t s = 0; s < o.identity_samples && w.is_null(); ++s) test(pick(), pick());
    }
    return rec("support_additivity", w.is_null(),
               json{{"mode", exhaustive ? "exhaustive" : "sampled"}, {"pairs", checked}}, w);
  }));

  recs.push_back(timed([&] {
    json w = nullptr;
    std::size_t checked = 0;
    for (Elem x : frame.lbar0()) {
      for (Elem y : frame.lbar0()) {
        ++checked;
        Elem acc = l.bottom();
        for (std::size_t i = 0; i < n; ++i)
          acc = l.join(acc, l.meet(frame.support_part(x, i), frame.support_part(y, i)));
        if (acc != l.meet(x, y)) {
          w = json{{"x", l.label(x)}, {"y", l.label(y)}};
          break;
        }
      }
      if (!w.is_null()) break;
    }
    return rec("lbar0_meet_by_supports", w.is_null(), json{{"pairs", checked}}, w);
  }));

  recs.push_back(timed([&] {
    json w = nullptr;
    std::size_t checked = 0;
    for (Elem v = 0; v < size && w.is_null(); ++v) {
      for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < n; ++i)
          if (mask >> i & 1) idx.push_back(i);
        ++checked;
        const Elem vi = frame.complement_over(v, idx);
        Elem part = l.bottom();
        bool ok = true;
        for (std::size_t i : idx) {
          part = l.join(part, frame.support_part(v, i));
          ok = ok && frame.support_part(vi, i) == l.bottom();
        }
        ok = ok && l.join(vi, part) == l.join(v, part);
        if (!ok) {
          w = json{{"v", l.label(v)}, {"I", idx}};
          break;
        }
      }
    }
    return rec("complement_over", w.is_null(), json{{"cases", checked}}, w);
  }));

  // (x+z)(y+t) = 0 implies (x+y)(z+t) = xz + yt
  auto quad_ok = [&](Elem x, Elem y, Elem z, Elem t) {
    return l.meet(l.join(x, y), l.join(z, t)) == l.join(l.meet(x, z), l.meet(y, t));
  };
  recs.push_back(timed([&] {
    std::size_t checked = 0, draws = 0;
    json w = nullptr;
    while (checked < o.identity_samples && draws < 1000 * o.identity_samples && w.is_null()) {
      ++draws;
      const Elem x = pick(), z = pick();
      const Elem xz = l.join(x, z);
      // y + t below some w with (x+z) w = 0
      std::vector<Elem> disjoint;
      for (Elem c = 0; c < size; ++c)
        if (l.meet(xz, c) == l.bottom()) disjoint.push_back(c);
      const Elem cap = disjoint[rng() % disjoint.size()];
      std::vector<Elem> below;
      for (Elem c = 0; c < size; ++c)
        if (l.leq(c, cap)) below.push_back(c);
      const Elem y = below[rng() % below.size()], t = below[rng() % below.size()];
      ++checked;
      if (!quad_ok(x, y, z, t)) w = json{{"x", l.label(x)}, {"y", l.label(y)}, {"z", l.label(z)}, {"t", l.label(t)}};
    }
    return rec("disjoint_sum_meet_sampled", w.is_null() && checked == o.identity_samples,
               json{{"samples", checked}}, w);
  }));
  if (size * size * size * size <= 1'000'000) {
    recs.push_back(timed([&] {
      std::size_t checked = 0;
      json w = nullptr;
      for (Elem x = 0; x < size && w.is_null(); ++x)
        for (Elem z = 0; z < size && w.is_null(); ++z)
          for (Elem y = 0; y < size && w.is_null(); ++y)
            for (Elem t = 0; t < size; ++t) {
              if (l.meet(l.join(x, z), l.join(y, t)) != l.bottom()) continue;
              ++checked;
              if (!quad_ok(x, y, z, t)) {
                w = json{{"x", l.label(x)}, {"y", l.label(y)}, {"z", l.label(z)}, {"t", l.label(t)}};
                break;
              }
            }
      return rec("disjoint_sum_meet_exhaustive", w.is_null(), json{{"quadruples", checked}}, w);
    }));
  }

  recs.push_back(timed([&] {
    json w = nullptr;
    for (std::size_t s = 0; s < o.identity_samples && w.is_null(); ++s) {
      const std::size_t k = 2 + rng() % 3;
      const Elem x = pick();
      std::vector<Elem> xs(k);
      for (auto& e : xs) e = pick();
      Elem lhs = l.bottom(), total = l.bottom(), prod = l.top();
      for (std::size_t i = 0; i < k; ++i) {
        Elem hat = l.bottom();
        for (std::size_t j = 0; j < k; ++j)
          if (j != i) hat = l.join(hat, xs[j]);
        const Elem xh = l.join(x, hat);
        lhs = l.join(lhs, l.meet(xh, xs[i]));
        total = l.join(total, xs[i]);
        prod = l.meet(prod, xh);
      }
      if (lhs != l.meet(total, prod)) w = json{{"x", l.label(x)}, {"xs", labels_of(l, xs)}};
    }
    return rec("hat_product_identity", w.is_null(), json{{"samples", o.identity_samples}}, w);
  }));

  rep.summary = ctx.ring().describe() + " n=" + std::to_string(n) + " support identities";
  finish(rep, recs, &ctx, o);
  return rep;
}

Report axioms_report(const GaloisContext& ctx, const std::vector<std::string>& ids, const ReportOptions& o) {
  Report rep;
  rep.doc = header("check-axioms", &ctx, o);
  AxiomOptions a = o.axioms;
  a.jobs = o.jobs;
  a.seed = o.seed;
  a.mode = o.mode;
  a.report_only = report_only(&ctx, o);
  rep.doc["conditions"] = ids;
  auto recs = check_conditions(ctx, ids, a);
  finish(rep, recs, &ctx, o);
  return rep;
}

Report nets_report(const NetCatalog& catalog, const ReportOptions& o) {
  const GaloisContext& ctx = catalog.context();
  const FiniteLattice& l = ctx.lattice();
  Report rep;
  rep.doc = header("nets", &ctx, o);
  rep.doc["candidates"] = catalog.candidates().size();
  json invalid = json::array();
  for (std::size_t c = 0; c < catalog.candidates().size(); ++c) {
    const auto& chk = catalog.candidate_checks()[c];
    if (!chk.valid) invalid.push_back({{"tau", net_labels(l, catalog.candidates()[c])}, {"clause", chk.clause}});
  }
  rep.doc["invalid"] = invalid;

  const auto& nets = catalog.nets();
  std::vector<std::vector<CheckRecord>> per(nets.size());
  parallel_for(o.jobs, nets.size(), [&](std::size_t k) { per[k] = verify_net(catalog, k, o.mode); });

  json list = json::array();
  std::vector<CheckRecord> recs = verify_instance_statements(catalog);
  for (std::size_t k = 0; k < nets.size(); ++k) {
    json e{{"tau", net_labels(l, nets[k].tau)},
           {"K", labels_of(l, nets[k].k.members())},
           {"fixer_order", nets[k].group.order()},
           {"closed", labels_of(l, nets[k].closed.members())}};
    try {
      e["dnet"] = dnet_to_json(bridge(ctx, nets[k].tau))["sigma"];
    } catch (const ConsistencyError&) {
      e["dnet"] = nullptr;
    }
    list.push_back(std::move(e));
    for (auto& r : per[k]) {
      r.id = "net" + std::to_string(k) + "." + r.id;
      recs.push_back(std::move(r));
    }
  }
  rep.doc["nets"] = list;
  json orders = json::array();
  for (const auto& e : nets) orders.push_back(e.group.order());
  std::ostringstream os;
  os << nets.size() << " valid net collections of " << catalog.candidates().size() << " candidates; fixer orders "
     << orders.dump();
  rep.summary = os.str();
  finish(rep, recs, &ctx, o);
  return rep;
}

Report classes_report(const NetCatalog& catalog, const ReportOptions& o) {
  const GaloisContext& ctx = catalog.context();
  const FiniteLattice& l = ctx.lattice();
  Report rep;
  rep.doc = header("classes", &ctx, o);
  std::vector<CheckRecord> recs;
  if (!catalog.has_classes()) {
    recs.push_back(rec("classes_enumerated", false, json{{"error", catalog.classes_error()}}));
    finish(rep, recs, &ctx, o);
    return rep;
  }
  rep.doc["sublattices"] = catalog.sublattices().size();
  json list = json::array();
  bool closures_closed = true;
  for (const auto& cls : catalog.classes()) {
    json members = json::array();
    for (const auto& m : cls.members) members.push_back(labels_of(l, m.members()));
    std::optional<std::size_t> net;
    for (std::size_t k = 0; k < catalog.nets().size(); ++k)
      if (catalog.nets()[k].closed == cls.closure) net = k;
    if (!net) closures_closed = false;
    list.push_back({{"fixer_order", cls.common_fixer.order()},
                    {"closure", labels_of(l, cls.closure.members())},
                    {"net", net ? json(*net) : json(nullptr)},
                    {"members", members}});
  }
  rep.doc["classes"] = list;
  recs.push_back(rec("class_count_matches_nets", catalog.classes().size() == catalog.nets().size(),
                     json{{"classes", catalog.classes().size()}, {"nets", catalog.nets().size()}}));
  recs.push_back(rec("closures_are_net_closed", closures_closed));
  std::ostringstream os;
  os << catalog.sublattices().size() << " sublattices of L0' in " << catalog.classes().size() << " classes";
  rep.summary = os.str();
  finish(rep, recs, &ctx, o);
  return rep;
}

namespace {

TheoremOptions theorem_options(const ReportOptions& o) {
  TheoremOptions t = o.theorems;
  t.seed = o.seed;
  t.mode = o.mode;
  return t;
}

json main_summary(const FiniteLattice& l, const Subgroup& f, const SubgroupVerification& v) {
  return {{"F_order", f.order()},
          {"sigma", net_labels(l, v.sigma)},
          {"K", labels_of(l, v.k.members())},
          {"K_fixer_order", v.k_fixer.order()},
          {"overline", labels_of(l, v.overline.members())},
          {"index", v.index}};
}

}  // namespace

Report sigma_report(const NetCatalog& catalog, const Subgroup& f, const ReportOptions& o) {
  const GaloisContext& ctx = catalog.context();
  Report rep;
  rep.doc = header("sigma", &ctx, o);
  auto v = verify_main_theorems(catalog, f, theorem_options(o));
  rep.doc["result"] = main_summary(ctx.lattice(), f, v);
  rep.summary = "sigma = " + json(net_labels(ctx.lattice(), v.sigma)).dump() + ", |F| = " + std::to_string(f.order()) +
                ", |G(K)| = " + std::to_string(v.k_fixer.order());
  finish(rep, v.checks, &ctx, o);
  return rep;
}

Report sandwich_report(const DNetCatalog& dnets, const Subgroup& f, const ReportOptions& o) {
  const GaloisContext& ctx = dnets.nets().context();
  Report rep;
  rep.doc = header("sandwich", &ctx, o);
  auto v = verify_main_theorems(dnets.nets(), f, theorem_options(o));
  auto s = verify_sandwich(dnets, f, v);
  json result = main_summary(ctx.lattice(), f, v);
  result["dnet"] = dnet_to_json(s.sigma)["sigma"];
  result["net_subgroup_order"] = s.net_order;
  result["normalizer_order"] = s.normalizer_order;
  rep.doc["result"] = result;
  std::vector<CheckRecord> recs = std::move(v.checks);
  for (auto& r : s.checks) {
    r.id = "sandwich." + r.id;
    recs.push_back(std::move(r));
  }
  std::ostringstream os;
  os << "D-net " << result["dnet"].dump() << ": |G(sigma)| = " << s.net_order << ", |F| = " << s.f_order
     << ", |N(sigma)| = " << s.normalizer_order;
  rep.summary = os.str();
  finish(rep, recs, &ctx, o);
  return rep;
}

std::vector<GIndex> sweep_elements(const Ambient& g, std::optional<std::size_t> sample, std::uint64_t seed) {
  std::vector<GIndex> out;
  if (!sample || *sample >= g.size()) {
    out.resize(g.size());
    for (GIndex a = 0; a < g.size(); ++a) out[a] = a;
    return out;
  }
  std::mt19937_64 rng(seed);
  std::vector<char> seen(g.size(), 0);
  while (out.size() < *sample) {
    const auto a = static_cast<GIndex>(rng() % g.size());
    if (!seen[a]) {
      seen[a] = 1;
      out.push_back(a);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Report sweep_report(const DNetCatalog& dnets, std::span<const GIndex> elements, const ReportOptions& o) {
  const NetCatalog& catalog = dnets.nets();
  const GaloisContext& ctx = catalog.context();
  const Ambient& g = ctx.group();
  Report rep;
  rep.doc = header("sweep", &ctx, o);
  rep.doc["family"] = "cyclic-over-D";

  // Masks first, so equal subgroups are verified once regardless of jobs.
  std::vector<Bitset> masks(elements.size());
  parallel_for(o.jobs, elements.size(), [&](std::size_t k) {
    const GIndex a[] = {elements[k]};
    masks[k] = extend_subgroup(g, ctx.H(), a, ctx.cap()).mask;
  });
  std::unordered_map<Bitset, std::size_t, BitsetHash> distinct;
  std::vector<std::size_t> which(elements.size());
  std::vector<GIndex> reps;
  for (std::size_t k = 0; k < elements.size(); ++k) {
    auto [it, inserted] = distinct.emplace(masks[k], reps.size());
    if (inserted) reps.push_back(elements[k]);
    which[k] = it->second;
  }
  masks.clear();
  masks.shrink_to_fit();

  struct Outcome {
    json summary;
    std::vector<CheckRecord> checks;
  };
  std::vector<Outcome> outcomes(reps.size());
  const TheoremOptions topt = theorem_options(o);
  const bool ro = report_only(&ctx, o);
  parallel_for(o.jobs, reps.size(), [&](std::size_t k) {
    const GIndex a[] = {reps[k]};
    const Subgroup f = extend_subgroup(g, ctx.H(), a, ctx.cap());
    auto v = verify_main_theorems(catalog, f, topt);
    auto s = verify_sandwich(dnets, f, v);
    Outcome out;
    out.summary = main_summary(ctx.lattice(), f, v);
    out.summary["dnet"] = dnet_to_json(s.sigma)["sigma"];
    out.summary["normalizer_order"] = s.normalizer_order;
    out.checks = std::move(v.checks);
    for (auto& r : s.checks) {
      r.id = "sandwich." + r.id;
      out.checks.push_back(std::move(r));
    }
    if (ro) unassert(out.checks);
    outcomes[k] = std::move(out);
  });

  std::size_t passed = 0;
  json subgroups = json::array();
  std::vector<CheckRecord> all;
  std::map<std::string, std::size_t> failing;
  std::vector<char> sub_ok(reps.size());
  for (std::size_t k = 0; k < reps.size(); ++k) {
    sub_ok[k] = all_asserted_hold(outcomes[k].checks);
    json s = outcomes[k].summary;
    s["generator"] = element_json(g, reps[k]);
    s["ok"] = sub_ok[k] != 0;
    s["checks"] = records_json(outcomes[k].checks, o.timings);
    subgroups.push_back(std::move(s));
    for (const auto& r : outcomes[k].checks)
      if (!r.holds && r.asserted) ++failing[r.id];
  }
  json verdicts = json::array();
  for (std::size_t k = 0; k < elements.size(); ++k) {
    verdicts.push_back({{"g", element_json(g, elements[k])}, {"subgroup", which[k]}, {"ok", sub_ok[which[k]] != 0}});
    if (sub_ok[which[k]]) ++passed;
  }
  rep.doc["elements"] = elements.size();
  rep.doc["distinct_subgroups"] = reps.size();
  rep.doc["passed"] = passed;
  rep.doc["failed"] = elements.size() - passed;
  rep.doc["failing_checks"] = failing;
  rep.doc["verdicts"] = verdicts;
  rep.doc["subgroups"] = subgroups;
  rep.ok = passed == elements.size();

  // Aggregate record per check id over the distinct subgroups.
  std::map<std::string, std::pair<std::size_t, std::size_t>> tally;
  std::map<std::string, bool> asserted;
  std::vector<std::string> order;
  for (const auto& out : outcomes)
    for (const auto& r : out.checks) {
      if (!tally.count(r.id)) order.push_back(r.id);
      auto& t = tally[r.id];
      ++t.first;
      if (!r.holds) ++t.second;
      asserted[r.id] = r.asserted;
    }
  for (const auto& id : order) {
    CheckRecord r = rec(id, tally[id].second == 0, json{{"subgroups", tally[id].first}, {"failures", tally[id].second}});
    r.asserted = asserted[id];
    all.push_back(std::move(r));
  }
  std::ostringstream os;
  os << elements.size() << " subgroups <D, g> (" << reps.size() << " distinct): " << passed << " pass, "
     << elements.size() - passed << " fail";
  rep.summary = os.str();
  finish(rep, all, &ctx, o);
  return rep;
}

DNet broken_product_fixture(std::uint32_t k) {
  DNet s(3, k, 0);
  s(0, 2) = k;
  return s;
}

Report negative_controls_report(const ReportOptions& o) {
  Report rep;
  rep.doc = header("negative-controls", nullptr, o);
  std::vector<CheckRecord> recs;

  recs.push_back(timed([&] {
    const FiniteLattice n5 = pentagon_lattice();
    const auto v = modularity_violation(n5);
    json w = nullptr;
    bool replayed = false;
    if (v) {
      w = json{{"x", n5.label((*v)[0])}, {"y", n5.label((*v)[1])}, {"z", n5.label((*v)[2])}};
      replayed = modularity_witness_fails(n5, *v);
    }
    return rec("pentagon_not_modular", v.has_value() && replayed, json{{"replayed", replayed}}, w);
  }));

  const DNet broken7 = broken_product_fixture(1);
  recs.push_back(rec("fixture_breaks_product_law", !is_dnet(broken7), dnet_to_json(broken7)));

  recs.push_back(timed([&] {
    // GL(3,7) is out of reach; search diagonal and elementary matrices.
    const Ring r = Ring::prime_field(7);
    std::vector<Matrix> pool;
    for (auto a : r.units())
      for (auto b : r.units())
        for (auto c : r.units()) {
          Matrix m = identity_matrix(3);
          m(0, 0) = a;
          m(1, 1) = b;
          m(2, 2) = c;
          pool.push_back(m);
        }
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        if (i != j)
          for (std::uint32_t xi = 1; xi < r.modulus(); ++xi) {
            Matrix m = identity_matrix(3);
            m(i, j) = xi;
            pool.push_back(m);
          }
    const auto esc = net_product_escape(r, broken7, pool);
    json w = nullptr;
    if (esc) w = json{{"a", matrix_to_json(esc->first)}, {"b", matrix_to_json(esc->second)},
                      {"ab", matrix_to_json(multiply(r, esc->first, esc->second))}};
    return rec("broken_net_not_closed_F7", esc.has_value(), json{{"pool", pool.size()}}, w);
  }));

  recs.push_back(timed([&] {
    const Ring r = Ring::chain(2, 2);
    const auto g = Ambient::general_linear(SubmoduleLattice::build(r, 3));
    const DNet broken = broken_product_fixture(2);
    const Bitset mask = net_matrix_mask(*g, broken);
    std::vector<GIndex> members;
    for (GIndex a = 0; a < g->size(); ++a)
      if (mask.test(a)) members.push_back(a);
    json w = nullptr;
    for (GIndex a : members) {
      for (GIndex b : members)
        if (!mask.test(g->mul(a, b))) {
          w = json{{"a", element_json(*g, a)}, {"b", element_json(*g, b)}, {"ab", element_json(*g, g->mul(a, b))}};
          break;
        }
      if (!w.is_null()) break;
    }
    return rec("broken_net_not_closed_Z4", !w.is_null(), json{{"G", g->size()}, {"net_set", members.size()}}, w);
  }));

  recs.push_back(timed([&] {
    const auto ctx = GaloisContext::build(Ring::prime_field(2), 2);
    AxiomOptions a = o.axioms;
    a.jobs = o.jobs;
    a.seed = o.seed;
    const auto verdicts = check_conditions(*ctx, all_condition_ids(*ctx), a);
    bool none_asserted = !verdicts.empty();
    for (const auto& v : verdicts) none_asserted = none_asserted && !v.asserted;
    json list = json::array();
    for (const auto& v : verdicts) list.push_back(to_json(v, false));
    return rec("F2_report_only", none_asserted, json{{"verdicts", list}});
  }));

  rep.summary = "negative controls";
  finish(rep, recs, nullptr, o);
  return rep;
}

}  // namespace netgalois
