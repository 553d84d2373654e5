#include "netgalois/axioms.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <random>
#include <set>
#include <unordered_map>

#include "netgalois/error.hpp"
#include "netgalois/io.hpp"
#include "netgalois/parallel.hpp"

namespace netgalois {

using nlohmann::json;

const char* to_string(PoolMode mode) {
  switch (mode) {
    case PoolMode::Exhaustive:
      return "exhaustive";
    case PoolMode::Sampled:
      return "sampled";
    case PoolMode::Auto:
      return "auto";
  }
  return "auto";
}

std::vector<std::string> all_condition_ids(const GaloisContext& ctx) {
  std::vector<std::string> ids;
  for (int c = 1; c <= 12; ++c) ids.push_back("c" + std::to_string(c));
  if (ctx.frame().m() == 1)
    for (int c = 1; c <= 4; ++c) ids.push_back("m" + std::to_string(c));
  return ids;
}

namespace {

int parse_int(std::string_view s) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) throw InputError("bad condition selector: " + std::string(s));
  return v;
}

}  // namespace

std::vector<std::string> parse_condition_selection(std::string_view text, const GaloisContext& ctx) {
  if (text.empty() || text == "all") return all_condition_ids(ctx);
  std::vector<std::string> out;
  while (!text.empty()) {
    const auto comma = text.find(',');
    std::string_view tok = text.substr(0, comma);
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
    if (tok.empty()) continue;
    std::string prefix = "c";
    if (tok.front() == 'm' || tok.front() == 'c') {
      prefix = std::string(1, tok.front());
      tok.remove_prefix(1);
    }
    int lo, hi;
    const auto dash = tok.find('-');
    if (dash == std::string_view::npos) {
      lo = hi = parse_int(tok);
    } else {
      std::string_view rhs = tok.substr(dash + 1);
      if (!rhs.empty() && rhs.front() == prefix.front()) rhs.remove_prefix(1);
      lo = parse_int(tok.substr(0, dash));
      hi = parse_int(rhs);
    }
    if (prefix == "m" && ctx.frame().m() != 1) throw InputError("conditions m1-m4 need m = 1");
    const int top = prefix == "m" ? 4 : 12;
    if (lo < 1 || hi > top || lo > hi) throw InputError("condition range out of bounds");
    for (int c = lo; c <= hi; ++c) {
      std::string id = prefix + std::to_string(c);
      if (std::find(out.begin(), out.end(), id) == out.end()) out.push_back(id);
    }
  }
  return out;
}

std::string condition_name(std::string_view id) {
  static const std::map<std::string, std::string, std::less<>> names{
      {"c1", "frame shares bottom and top"},
      {"c2", "atoms have equal dimension"},
      {"c3", "diagonal correction inside H_i"},
      {"c4", "conjugation by H_t ∩ G(L̄_0) respects supports"},
      {"c5", "support lifting along e_i"},
      {"c6", "support monotonicity on L_0'"},
      {"c7", "decomposition into transvection ideals"},
      {"c8", "transvection realizing a support column"},
      {"c9", "transvection straightening w to e_i"},
      {"c10", "transvections generated by H and given transvections"},
      {"c11", "conjugates give transvections in <a, H>"},
      {"c12", "L_0' inside L̄_0"},
      {"m1", "H_i moves every atom over e_i"},
      {"m2", "H transitive on atoms of equal support"},
      {"m3", "H_ij(e_j) nonempty"},
      {"m4", "conjugates give transvections in <a, H>"},
  };
  const auto dot = id.find('.');
  auto it = names.find(id.substr(0, dot));
  return it == names.end() ? std::string{} : it->second;
}

bool is_report_only_instance(const GaloisContext& ctx) { return ctx.ring().p() < 7; }

namespace {

struct Env {
  const GaloisContext& ctx;
  const Ambient& g;
  const FiniteLattice& l;
  const Frame& frame;
  std::size_t n;
  TransvectionMode mode;

  Env(const GaloisContext& c, TransvectionMode m)
      : ctx(c), g(c.group()), l(c.lattice()), frame(c.frame()), n(c.n()), mode(c.resolve(m)) {}

  Elem supp(Elem x, std::size_t i) const { return frame.support_part(x, i); }
  Elem e(std::size_t i) const { return frame.atom(i); }
  const std::vector<GIndex>& members(std::size_t i, std::size_t j, Elem x) const {
    return ctx.transvection_members(i, j, x, mode);
  }
  json mat(GIndex a) const { return element_json(g, a); }
  GIndex elem(const json& w, const char* key) const { return element_from_json(g, w.at(key)); }
  Elem lat(const json& w, const char* key) const { return element_by_label(l, w.at(key).get<std::string>()); }
  std::size_t idx(const json& w, const char* key) const {
    const auto v = w.at(key).get<std::size_t>();
    if (v >= n) throw InputError(std::string("index out of range: ") + key);
    return v;
  }
  std::vector<Elem> atoms_of_L() const {
    std::vector<Elem> out;
    for (Elem x = 0; x < l.size(); ++x) {
      const auto& c = l.lower_covers(x);
      if (c.size() == 1 && c.front() == l.bottom()) out.push_back(x);
    }
    return out;
  }
  std::vector<GIndex> ht_lbar0(std::size_t t) const {
    std::vector<GIndex> out;
    for (GIndex h : ctx.H_i(t).members)
      if (ctx.G_lbar0().contains(h)) out.push_back(h);
    return out;
  }
};

// Predicates at one instance of the universally quantified variables. Each
// returns true when the condition holds there.

bool c3_at(const Env& v, GIndex a, std::size_t i) {
  if (v.supp(v.g.act(a, v.e(i)), i) != v.e(i)) return true;
  for (GIndex h : v.ctx.H_i(i).members) {
    const GIndex ha = v.g.mul(h, a), ah = v.g.mul(a, h);
    bool ok = true;
    for (Elem x : v.frame.below_atom(i)) {
      if (v.supp(v.g.act(ha, x), i) != x || v.supp(v.g.act(ah, x), i) != x) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

bool c4_pred(const Env& v, GIndex h, std::size_t t, GIndex a, std::size_t, std::size_t r, Elem x) {
  const GIndex ai = v.g.inv(a);
  const Elem lhs = v.supp(v.g.act(v.g.conj(a, h), x), r);
  const Elem rhs = v.supp(v.g.act(a, v.supp(v.g.act(ai, x), t)), r);
  return lhs == rhs;
}

// weak: some h for this (t, a, i, r, x)
bool c4_weak_at(const Env& v, const std::vector<GIndex>& hs, std::size_t t, GIndex a, std::size_t i, std::size_t r,
                Elem x) {
  for (GIndex h : hs)
    if (c4_pred(v, h, t, a, i, r, x)) return true;
  return false;
}

// h works for every (i, r, x) at this a
bool c4_h_works_at(const Env& v, GIndex h, std::size_t t, GIndex a) {
  for (std::size_t i = 0; i < v.n; ++i)
    for (std::size_t r = 0; r < v.n; ++r) {
      if (r == i) continue;
      for (Elem x : v.frame.below_atom(i))
        if (!c4_pred(v, h, t, a, i, r, x)) return false;
    }
  return true;
}

std::vector<Elem> lift_images(const Env& v, std::size_t i) {
  std::vector<char> seen(v.l.size(), 0);
  for (GIndex t = 0; t < v.g.size(); ++t) {
    bool ok = true;
    for (std::size_t s = 0; s < v.n && ok; ++s)
      if (s != i && !v.g.fixes(t, v.e(s))) ok = false;
    if (ok) seen[v.g.act(t, v.e(i))] = 1;
  }
  std::vector<Elem> out;
  for (Elem y = 0; y < v.l.size(); ++y)
    if (seen[y]) out.push_back(y);
  return out;
}

bool c5_premise(const Env& v, Elem u, std::size_t i) { return v.frame.in_lbar0(u) && v.l.leq(v.e(i), u); }

bool c5_at(const Env& v, const std::vector<Elem>& images, Elem u, std::size_t i, GIndex g) {
  if (!c5_premise(v, u, i) || v.supp(v.g.act(g, u), i) != v.e(i)) return true;
  for (Elem y : images) {
    bool below = true;
    for (std::size_t j = 0; j < v.n && below; ++j) below = v.l.leq(v.supp(y, j), v.supp(u, j));
    if (below && v.supp(v.g.act(g, y), i) == v.e(i)) return true;
  }
  return false;
}

std::vector<Elem> fixed_below(const Env& v, std::size_t i) {
  std::vector<Elem> out;
  for (Elem x : v.frame.below_atom(i))
    if (v.ctx.L0prime().contains(x)) out.push_back(x);
  return out;
}

std::optional<Elem> c6_failure(const Env& v, GIndex f, GIndex g, std::size_t i, std::size_t j) {
  if (!v.l.leq(v.supp(v.g.act(f, v.e(i)), j), v.supp(v.g.act(g, v.e(i)), j))) return std::nullopt;
  for (Elem x : fixed_below(v, i))
    if (!v.l.leq(v.supp(v.g.act(f, x), j), v.supp(v.g.act(g, x), j))) return x;
  return std::nullopt;
}

bool c7_at(const Env& v, std::size_t i, std::size_t j, Elem u) {
  Elem acc = v.l.bottom();
  for (Elem y : v.frame.below_atom(j))
    if (v.l.leq(y, u) && !v.members(i, j, y).empty()) acc = v.l.join(acc, y);
  return acc == u;
}

std::vector<Elem> column_signature(const Env& v, GIndex f, std::size_t i, std::size_t j) {
  std::vector<Elem> sig;
  for (Elem u : v.frame.below_atom(i)) sig.push_back(v.supp(v.g.act(f, u), j));
  return sig;
}

bool c8_at(const Env& v, GIndex f, std::size_t i, std::size_t j) {
  const Elem x = v.supp(v.g.act(f, v.e(i)), j);
  const auto want = column_signature(v, f, i, j);
  for (GIndex t : v.members(i, j, x))
    if (column_signature(v, t, i, j) == want) return true;
  return false;
}

// Premise of the straightening condition: d(w) = m, [w] has e_i at i, x at
// j and zero elsewhere, H_ij(x) nonempty.
std::optional<Elem> c9_premise(const Env& v, Elem w, std::size_t i, std::size_t j, bool others_zero) {
  if (v.l.dimension(w) != v.frame.m() || v.supp(w, i) != v.e(i)) return std::nullopt;
  if (others_zero)
    for (std::size_t k = 0; k < v.n; ++k)
      if (k != i && k != j && v.supp(w, k) != v.l.bottom()) return std::nullopt;
  const Elem x = v.supp(w, j);
  if (v.members(i, j, x).empty()) return std::nullopt;
  return x;
}

bool c9_at(const Env& v, Elem w, std::size_t i, std::size_t j) {
  const auto x = c9_premise(v, w, i, j, true);
  if (!x) return true;
  for (GIndex t : v.members(i, j, *x))
    if (v.g.act(t, w) == v.e(i)) return true;
  return false;
}

bool c9_consequence_at(const Env& v, Elem u, std::size_t i, std::size_t j) {
  const auto x = c9_premise(v, u, i, j, false);
  if (!x) return true;
  for (GIndex t : v.members(i, j, *x))
    if (v.supp(v.g.act(t, u), j) == v.l.bottom()) return true;
  return false;
}

std::optional<GIndex> first_member_in(const Env& v, std::size_t i, std::size_t j, Elem x, const Subgroup& s) {
  for (GIndex t : v.members(i, j, x))
    if (s.contains(t)) return t;
  return std::nullopt;
}

Elem conj_column(const Env& v, GIndex a, GIndex h, std::size_t i, std::size_t j) {
  return v.supp(v.g.act(v.g.conj(a, h), v.e(i)), j);
}

bool c11_weak_at(const Env& v, const Subgroup& s, GIndex a, GIndex h, std::size_t i, std::size_t j) {
  return first_member_in(v, i, j, conj_column(v, a, h, i, j), s).has_value();
}

Elem c11_strong_column(const Env& v, GIndex a, std::size_t t, std::size_t i, std::size_t j) {
  Elem acc = v.l.bottom();
  for (GIndex h : v.ctx.H_i(t).members) acc = v.l.join(acc, conj_column(v, a, h, i, j));
  return acc;
}

bool m1_at(const Env& v, std::size_t i) {
  std::vector<Elem> over;
  for (Elem x : v.atoms_of_L())
    if (x != v.e(i) && v.supp(x, i) == v.e(i)) over.push_back(x);
  for (GIndex h : v.ctx.H_i(i).members) {
    bool moves = true;
    for (Elem x : over)
      if (v.g.fixes(h, x)) {
        moves = false;
        break;
      }
    if (moves) return true;
  }
  return false;
}

bool m2_at(const Env& v, Elem x, Elem y) {
  if (v.frame.support(x).parts != v.frame.support(y).parts) return true;
  for (GIndex h : v.ctx.H().members)
    if (v.g.act(h, x) == y) return true;
  return false;
}

// Pool of elements for universally quantified group variables.
struct Pool {
  std::vector<GIndex> all;
  std::vector<GIndex> closures;
  bool exhaustive = true;
};

Pool make_pool(const Ambient& g, const AxiomOptions& o) {
  Pool p;
  bool exhaustive = o.pool == PoolMode::Exhaustive || (o.pool == PoolMode::Auto && g.size() <= o.exhaustive_limit);
  if (o.pool == PoolMode::Exhaustive && g.size() > kExhaustiveRefuse)
    throw CapExceeded("exhaustive axiom checks refused for |G| = " + std::to_string(g.size()), g.size());
  p.exhaustive = exhaustive;
  if (exhaustive) {
    p.all.resize(g.size());
    for (GIndex a = 0; a < g.size(); ++a) p.all[a] = a;
    p.closures = p.all;
    return p;
  }
  std::mt19937_64 rng(o.seed);
  std::vector<GIndex> order;
  std::vector<char> seen(g.size(), 0);
  for (std::size_t s = 0; s < o.samples; ++s) {
    const auto a = static_cast<GIndex>(rng() % g.size());
    if (!seen[a]) {
      seen[a] = 1;
      order.push_back(a);
    }
  }
  p.closures.assign(order.begin(), order.begin() + std::min(order.size(), o.closure_samples));
  std::sort(p.closures.begin(), p.closures.end());
  p.all = std::move(order);
  std::sort(p.all.begin(), p.all.end());
  return p;
}

class Checker {
 public:
  Checker(const GaloisContext& ctx, const AxiomOptions& o) : v_(ctx, o.mode), o_(o), pool_(make_pool(ctx.group(), o)) {}

  std::vector<CheckRecord> run(const std::string& id) const {
    if (id == "c1") return {timed([&] { return c1(); })};
    if (id == "c2") return {timed([&] { return c2(); })};
    if (id == "c3") return {timed([&] { return c3(); })};
    if (id == "c4") return {timed([&] { return c4_weak(); }), timed([&] { return c4_strong(); })};
    if (id == "c5") return {timed([&] { return c5(); })};
    if (id == "c6") return {timed([&] { return c6(); })};
    if (id == "c7") return {timed([&] { return c7(); })};
    if (id == "c8") return {timed([&] { return c8(); })};
    if (id == "c9") return {timed([&] { return c9(); }), timed([&] { return c9_consequence(); })};
    if (id == "c10") return {timed([&] { return c10(); })};
    if (id == "c11") {
      auto recs = c11("c11");
      return recs;
    }
    if (id == "c12") return {timed([&] { return c12(); })};
    if (id == "m1") return {timed([&] { return m1(); })};
    if (id == "m2") return {timed([&] { return m2(); })};
    if (id == "m3") return {timed([&] { return m3(); })};
    if (id == "m4") {
      auto recs = c11("m4");
      recs.resize(1);
      recs.front().id = "m4";
      return recs;
    }
    throw InputError("unknown condition " + id);
  }

 private:
  CheckRecord make(const std::string& id, bool uses_pool, const char* reading = nullptr) const {
    CheckRecord r;
    r.id = id;
    r.detail = json{{"name", condition_name(id)}};
    if (reading) r.detail["reading"] = reading;
    if (uses_pool) {
      r.detail["pool"] = pool_.exhaustive ? "exhaustive" : "sampled";
      r.detail["pool_size"] = pool_.all.size();
      if (!pool_.exhaustive) r.detail["seed"] = o_.seed;
    }
    r.detail["transvection_mode"] = to_string(v_.mode);
    return r;
  }

  static void fail(CheckRecord& r, json w) {
    if (r.holds) {
      r.holds = false;
      r.witness = std::move(w);
    }
  }

  CheckRecord c1() const {
    CheckRecord r = make("c1", false);
    const auto& m = v_.ctx.L0().members();
    r.holds = v_.l.meet_all(m) == v_.l.bottom() && v_.l.join_all(m) == v_.l.top();
    return r;
  }

  CheckRecord c2() const {
    CheckRecord r = make("c2", false);
    json dims = json::array();
    std::set<std::size_t> distinct;
    for (std::size_t i = 0; i < v_.n; ++i) {
      dims.push_back(v_.l.dimension(v_.e(i)));
      distinct.insert(v_.l.dimension(v_.e(i)));
    }
    r.holds = distinct.size() == 1;
    r.detail["dimensions"] = dims;
    r.detail["m"] = v_.frame.m();
    return r;
  }

  CheckRecord c3() const {
    CheckRecord r = make("c3", true);
    for (GIndex a : pool_.all) {
      for (std::size_t i = 0; i < v_.n && r.holds; ++i)
        if (!c3_at(v_, a, i)) fail(r, json{{"a", v_.mat(a)}, {"i", i}});
      if (!r.holds) break;
    }
    return r;
  }

  CheckRecord c4_weak() const {
    CheckRecord r = make("c4.weak", true, "h may depend on a, i, r and x");
    for (std::size_t t = 0; t < v_.n && r.holds; ++t) {
      const auto hs = v_.ht_lbar0(t);
      for (GIndex a : pool_.all) {
        for (std::size_t i = 0; i < v_.n && r.holds; ++i)
          for (std::size_t rr = 0; rr < v_.n && r.holds; ++rr) {
            if (rr == i) continue;
            for (Elem x : v_.frame.below_atom(i))
              if (!c4_weak_at(v_, hs, t, a, i, rr, x)) {
                fail(r, json{{"t", t}, {"a", v_.mat(a)}, {"i", i}, {"r", rr}, {"x", v_.l.label(x)}});
                break;
              }
          }
        if (!r.holds) break;
      }
    }
    return r;
  }

  CheckRecord c4_strong() const {
    CheckRecord r = make("c4.strong", true, "one h for every a, i, r and x");
    r.asserted = false;
    for (std::size_t t = 0; t < v_.n && r.holds; ++t) {
      std::set<GIndex> killers;
      bool some = false;
      for (GIndex h : v_.ht_lbar0(t)) {
        std::optional<GIndex> killer;
        for (GIndex a : pool_.all)
          if (!c4_h_works_at(v_, h, t, a)) {
            killer = a;
            break;
          }
        if (!killer) {
          some = true;
          break;
        }
        killers.insert(*killer);
      }
      if (!some) {
        json as = json::array();
        for (GIndex a : killers) as.push_back(v_.mat(a));
        fail(r, json{{"t", t}, {"a", as}});
      }
    }
    return r;
  }

  CheckRecord c5() const {
    CheckRecord r = make("c5", true);
    for (std::size_t i = 0; i < v_.n && r.holds; ++i) {
      const auto images = lift_images(v_, i);
      for (Elem u : v_.frame.lbar0()) {
        if (!c5_premise(v_, u, i)) continue;
        for (GIndex g : pool_.all)
          if (!c5_at(v_, images, u, i, g)) {
            fail(r, json{{"u", v_.l.label(u)}, {"i", i}, {"g", v_.mat(g)}});
            break;
          }
        if (!r.holds) break;
      }
    }
    return r;
  }

  CheckRecord c6() const {
    CheckRecord r = make("c6", true);
    std::size_t pairs = 0;
    for (std::size_t i = 0; i < v_.n && r.holds; ++i) {
      const auto xs = fixed_below(v_, i);
      for (std::size_t j = 0; j < v_.n && r.holds; ++j) {
        // Elements with equal column data behave identically; keep one each.
        std::map<std::vector<Elem>, GIndex> reps;
        for (GIndex f : pool_.all) {
          std::vector<Elem> sig{v_.supp(v_.g.act(f, v_.e(i)), j)};
          for (Elem x : xs) sig.push_back(v_.supp(v_.g.act(f, x), j));
          reps.emplace(std::move(sig), f);
        }
        for (const auto& [sf, f] : reps) {
          for (const auto& [sg, g] : reps) {
            ++pairs;
            if (auto x = c6_failure(v_, f, g, i, j)) {
              fail(r, json{{"f", v_.mat(f)}, {"g", v_.mat(g)}, {"i", i}, {"j", j}, {"x", v_.l.label(*x)}});
              break;
            }
          }
          if (!r.holds) break;
        }
      }
    }
    r.detail["distinct_pairs"] = pairs;
    return r;
  }

  CheckRecord c7() const {
    CheckRecord r = make("c7", false);
    for (std::size_t j = 0; j < v_.n && r.holds; ++j)
      for (std::size_t i = 0; i < v_.n && r.holds; ++i) {
        if (i == j) continue;
        for (Elem u : v_.frame.below_atom(j))
          if (!c7_at(v_, i, j, u)) {
            fail(r, json{{"i", i}, {"j", j}, {"u", v_.l.label(u)}});
            break;
          }
      }
    return r;
  }

  CheckRecord c8() const {
    CheckRecord r = make("c8", true);
    for (std::size_t i = 0; i < v_.n && r.holds; ++i)
      for (std::size_t j = 0; j < v_.n && r.holds; ++j) {
        if (i == j) continue;
        std::map<Elem, std::set<std::vector<Elem>>> realized;
        for (Elem x : v_.frame.below_atom(j))
          for (GIndex t : v_.members(i, j, x)) realized[x].insert(column_signature(v_, t, i, j));
        for (GIndex f : pool_.all) {
          const Elem x = v_.supp(v_.g.act(f, v_.e(i)), j);
          if (!realized[x].contains(column_signature(v_, f, i, j))) {
            fail(r, json{{"f", v_.mat(f)}, {"i", i}, {"j", j}});
            break;
          }
        }
      }
    return r;
  }

  CheckRecord c9() const {
    CheckRecord r = make("c9", false);
    std::size_t premises = 0;
    for (Elem w = 0; w < v_.l.size() && r.holds; ++w)
      for (std::size_t i = 0; i < v_.n && r.holds; ++i)
        for (std::size_t j = 0; j < v_.n && r.holds; ++j) {
          if (i == j || !c9_premise(v_, w, i, j, true)) continue;
          ++premises;
          if (!c9_at(v_, w, i, j)) fail(r, json{{"w", v_.l.label(w)}, {"i", i}, {"j", j}});
        }
    r.detail["premises"] = premises;
    return r;
  }

  CheckRecord c9_consequence() const {
    CheckRecord r = make("c9.consequence", false);
    r.detail["name"] = "transvection clearing column j of u";
    for (Elem u = 0; u < v_.l.size() && r.holds; ++u)
      for (std::size_t i = 0; i < v_.n && r.holds; ++i)
        for (std::size_t j = 0; j < v_.n && r.holds; ++j)
          if (i != j && !c9_consequence_at(v_, u, i, j)) fail(r, json{{"u", v_.l.label(u)}, {"i", i}, {"j", j}});
    return r;
  }

  // Two transvections in one H-double coset generate the same subgroup
  // together with H, so families are taken over (x, coset) options.
  std::unordered_map<GIndex, std::uint32_t> double_cosets(const std::vector<GIndex>& elems) const {
    const Ambient& g = v_.g;
    const auto& hg = v_.ctx.H().generators;
    constexpr std::uint32_t kNone = ~std::uint32_t{0};
    std::vector<std::uint32_t> id(g.size(), kNone);
    std::uint32_t next = 0;
    std::vector<GIndex> stack;
    for (GIndex t : elems) {
      if (id[t] != kNone) continue;
      const std::uint32_t c = next++;
      id[t] = c;
      stack.push_back(t);
      while (!stack.empty()) {
        const GIndex a = stack.back();
        stack.pop_back();
        for (GIndex h : hg) {
          for (GIndex b : {g.mul(h, a), g.mul(a, h)}) {
            if (id[b] == kNone) {
              id[b] = c;
              stack.push_back(b);
            }
          }
        }
      }
    }
    std::unordered_map<GIndex, std::uint32_t> out;
    for (GIndex t : elems) out.emplace(t, id[t]);
    return out;
  }

  CheckRecord c10() const {
    CheckRecord r = make("c10", false);
    const Ambient& g = v_.g;
    std::size_t families = 0, closures = 0;
    bool sampled = false;
    for (std::size_t i = 0; i < v_.n && r.holds; ++i)
      for (std::size_t j = 0; j < v_.n && r.holds; ++j) {
        if (i == j) continue;
        // coset ids are local to (i, j)
        std::map<std::vector<GIndex>, Subgroup> cache;
        std::vector<GIndex> elems;
        for (Elem x : v_.frame.below_atom(j))
          for (GIndex t : v_.members(i, j, x)) elems.push_back(t);
        const auto coset = double_cosets(elems);
        // options: (x, representative) per coset meeting H_ij(x)
        struct Option {
          Elem x;
          GIndex rep;
        };
        std::vector<Option> options;
        std::set<std::pair<Elem, std::uint32_t>> taken;
        for (Elem x : v_.frame.below_atom(j))
          for (GIndex t : v_.members(i, j, x))
            if (taken.emplace(x, coset.at(t)).second) options.push_back({x, t});
        std::vector<std::uint64_t> subsets;
        const std::size_t k = options.size();
        if (k < 63 && (std::uint64_t{1} << k) <= o_.subset_limit) {
          for (std::uint64_t s = 1; s < (std::uint64_t{1} << k); ++s) subsets.push_back(s);
        } else {
          sampled = true;
          std::mt19937_64 rng(o_.seed + 1000 * i + j);
          for (std::size_t s = 0; s < o_.closure_samples; ++s) {
            std::uint64_t mask = 0;
            const std::size_t size = 1 + rng() % std::min<std::size_t>(k, 3);
            for (std::size_t c = 0; c < size; ++c) mask |= std::uint64_t{1} << (rng() % std::min<std::size_t>(k, 63));
            subsets.push_back(mask);
          }
        }
        for (std::uint64_t s : subsets) {
          ++families;
          std::vector<GIndex> reps;
          Elem sum = v_.l.bottom();
          for (std::size_t c = 0; c < k && c < 63; ++c)
            if (s >> c & 1) {
              reps.push_back(options[c].rep);
              sum = v_.l.join(sum, options[c].x);
            }
          std::vector<GIndex> key;
          for (GIndex a : reps) key.push_back(coset.at(a));
          std::sort(key.begin(), key.end());
          key.erase(std::unique(key.begin(), key.end()), key.end());
          auto it = cache.find(key);
          if (it == cache.end()) {
            ++closures;
            it = cache.emplace(key, extend_subgroup(g, v_.ctx.H(), reps, v_.ctx.cap())).first;
          }
          const Subgroup& gen = it->second;
          for (Elem y : v_.frame.below_atom(j)) {
            if (!v_.l.leq(y, sum)) continue;
            for (GIndex t : v_.members(i, j, y))
              if (!gen.contains(t)) {
                json as = json::array();
                for (GIndex a : reps) as.push_back(v_.mat(a));
                fail(r, json{{"i", i}, {"j", j}, {"a", as}, {"y", v_.l.label(y)}, {"t", v_.mat(t)}});
                break;
              }
            if (!r.holds) break;
          }
          if (!r.holds) break;
        }
      }
    r.detail["families"] = families;
    r.detail["closures"] = closures;
    r.detail["families_mode"] = sampled ? "sampled" : "exhaustive";
    if (sampled) r.detail["seed"] = o_.seed;
    return r;
  }

  std::vector<CheckRecord> c11(const std::string& base) const {
    CheckRecord weak = make(base + ".weak", true, "the literal statement for each h");
    CheckRecord strong = make(base + ".strong", true, "the join over h in H_t of the conjugate columns");
    strong.asserted = false;
    weak.detail["closure_pool_size"] = pool_.closures.size();
    strong.detail["closure_pool_size"] = pool_.closures.size();
    const auto t0 = std::chrono::steady_clock::now();
    double strong_time = 0;
    for (GIndex a : pool_.closures) {
      if (!weak.holds && !strong.holds) break;
      const GIndex ga[] = {a};
      const Subgroup s = extend_subgroup(v_.g, v_.ctx.H(), ga, v_.ctx.cap());
      for (std::size_t t = 0; t < v_.n; ++t)
        for (std::size_t i = 0; i < v_.n; ++i)
          for (std::size_t j = 0; j < v_.n; ++j) {
            if (i == j) continue;
            if (weak.holds) {
              std::set<Elem> done;
              for (GIndex h : v_.ctx.H_i(t).members) {
                const Elem x = conj_column(v_, a, h, i, j);
                if (!done.insert(x).second) continue;
                if (!first_member_in(v_, i, j, x, s)) {
                  fail(weak, json{{"a", v_.mat(a)}, {"t", t}, {"i", i}, {"j", j}, {"h", v_.mat(h)}});
                  break;
                }
              }
            }
            if (strong.holds) {
              const auto s0 = std::chrono::steady_clock::now();
              const Elem x = c11_strong_column(v_, a, t, i, j);
              if (!first_member_in(v_, i, j, x, s))
                fail(strong, json{{"a", v_.mat(a)}, {"t", t}, {"i", i}, {"j", j}});
              strong_time += std::chrono::duration<double>(std::chrono::steady_clock::now() - s0).count();
            }
          }
    }
    const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    weak.elapsed = total - strong_time;
    strong.elapsed = strong_time;
    return {weak, strong};
  }

  CheckRecord c12() const {
    CheckRecord r = make("c12", false);
    for (Elem x : v_.ctx.L0prime().members())
      if (!v_.frame.in_lbar0(x)) {
        fail(r, json{{"x", v_.l.label(x)}});
        break;
      }
    return r;
  }

  CheckRecord m1() const {
    CheckRecord r = make("m1", false);
    for (std::size_t i = 0; i < v_.n && r.holds; ++i)
      if (!m1_at(v_, i)) fail(r, json{{"i", i}});
    return r;
  }

  CheckRecord m2() const {
    CheckRecord r = make("m2", false);
    const auto atoms = v_.atoms_of_L();
    for (Elem x : atoms) {
      for (Elem y : atoms)
        if (!m2_at(v_, x, y)) {
          fail(r, json{{"x", v_.l.label(x)}, {"y", v_.l.label(y)}});
          break;
        }
      if (!r.holds) break;
    }
    r.detail["atoms"] = atoms.size();
    return r;
  }

  CheckRecord m3() const {
    CheckRecord r = make("m3", false);
    for (std::size_t i = 0; i < v_.n && r.holds; ++i)
      for (std::size_t j = 0; j < v_.n && r.holds; ++j)
        if (i != j && v_.members(i, j, v_.e(j)).empty()) fail(r, json{{"i", i}, {"j", j}});
    return r;
  }

  Env v_;
  const AxiomOptions& o_;
  Pool pool_;
};

}  // namespace

std::vector<CheckRecord> check_conditions(const GaloisContext& ctx, const std::vector<std::string>& ids,
                                          const AxiomOptions& options) {
  for (const auto& id : ids) {
    const bool known = (id.size() >= 2 && (id[0] == 'c' || id[0] == 'm')) && !condition_name(id).empty();
    if (!known) throw InputError("unknown condition " + id);
    if (id[0] == 'm' && ctx.frame().m() != 1) throw InputError(id + " applies only when the atoms have dimension 1");
  }
  const Checker checker(ctx, options);
  std::vector<std::vector<CheckRecord>> slots(ids.size());
  parallel_for(options.jobs, ids.size(), [&](std::size_t k) { slots[k] = checker.run(ids[k]); });
  std::vector<CheckRecord> out;
  for (auto& s : slots)
    for (auto& r : s) out.push_back(std::move(r));
  if (options.report_only || is_report_only_instance(ctx)) unassert(out);
  return out;
}

ReplayResult replay_condition(const GaloisContext& ctx, std::string_view id, const json& w, TransvectionMode mode) {
  const Env v(ctx, mode);
  ReplayResult res;
  bool holds = true;
  try {
    if (id == "c1" || id == "c2" || id == "c12" || id == "c7" || id == "m1" || id == "m3") {
      AxiomOptions o;
      o.mode = mode;
      o.pool = PoolMode::Sampled;
      o.samples = 1;
      const auto recs = check_conditions(ctx, {std::string(id)}, o);
      holds = recs.front().holds;
    } else if (id == "c3") {
      holds = c3_at(v, v.elem(w, "a"), v.idx(w, "i"));
    } else if (id == "c4.weak") {
      const std::size_t t = v.idx(w, "t");
      holds = c4_weak_at(v, v.ht_lbar0(t), t, v.elem(w, "a"), v.idx(w, "i"), v.idx(w, "r"), v.lat(w, "x"));
    } else if (id == "c4.strong") {
      const std::size_t t = v.idx(w, "t");
      std::vector<GIndex> as;
      for (const auto& m : w.at("a")) as.push_back(element_from_json(v.g, m));
      holds = false;
      for (GIndex h : v.ht_lbar0(t)) {
        bool all = true;
        for (GIndex a : as) all = all && c4_h_works_at(v, h, t, a);
        if (all) holds = true;
      }
    } else if (id == "c5") {
      const std::size_t i = v.idx(w, "i");
      holds = c5_at(v, lift_images(v, i), v.lat(w, "u"), i, v.elem(w, "g"));
    } else if (id == "c6") {
      const Elem x = v.lat(w, "x");
      const GIndex f = v.elem(w, "f"), g = v.elem(w, "g");
      const std::size_t i = v.idx(w, "i"), j = v.idx(w, "j");
      const bool premise = v.l.leq(v.supp(v.g.act(f, v.e(i)), j), v.supp(v.g.act(g, v.e(i)), j));
      holds = !premise || !ctx.L0prime().contains(x) || !v.l.leq(x, v.e(i)) ||
              v.l.leq(v.supp(v.g.act(f, x), j), v.supp(v.g.act(g, x), j));
    } else if (id == "c8") {
      holds = c8_at(v, v.elem(w, "f"), v.idx(w, "i"), v.idx(w, "j"));
    } else if (id == "c9") {
      holds = c9_at(v, v.lat(w, "w"), v.idx(w, "i"), v.idx(w, "j"));
    } else if (id == "c9.consequence") {
      holds = c9_consequence_at(v, v.lat(w, "u"), v.idx(w, "i"), v.idx(w, "j"));
    } else if (id == "c10") {
      const std::size_t i = v.idx(w, "i"), j = v.idx(w, "j");
      std::vector<GIndex> as;
      Elem sum = v.l.bottom();
      bool premise = true;
      for (const auto& m : w.at("a")) {
        const GIndex a = element_from_json(v.g, m);
        const Elem x = v.supp(v.g.act(a, v.e(i)), j);
        premise = premise && ctx.is_transvection(a, i, j, x);
        sum = v.l.join(sum, x);
        as.push_back(a);
      }
      const Elem y = v.lat(w, "y");
      const GIndex t = v.elem(w, "t");
      premise = premise && v.l.leq(y, sum) && ctx.is_transvection(t, i, j, y);
      holds = !premise || extend_subgroup(v.g, ctx.H(), as, ctx.cap()).contains(t);
    } else if (id == "c11.weak" || id == "m4") {
      const GIndex a = v.elem(w, "a");
      const GIndex ga[] = {a};
      const GIndex h = v.elem(w, "h");
      const std::size_t t = v.idx(w, "t");
      if (!ctx.H_i(t).contains(h)) throw InputError("h is not in H_t");
      holds = c11_weak_at(v, extend_subgroup(v.g, ctx.H(), ga, ctx.cap()), a, h, v.idx(w, "i"), v.idx(w, "j"));
    } else if (id == "c11.strong") {
      const GIndex a = v.elem(w, "a");
      const GIndex ga[] = {a};
      const std::size_t i = v.idx(w, "i"), j = v.idx(w, "j");
      const Elem x = c11_strong_column(v, a, v.idx(w, "t"), i, j);
      holds = first_member_in(v, i, j, x, extend_subgroup(v.g, ctx.H(), ga, ctx.cap())).has_value();
    } else if (id == "m2") {
      holds = m2_at(v, v.lat(w, "x"), v.lat(w, "y"));
    } else {
      throw InputError("cannot replay " + std::string(id));
    }
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed witness: ") + e.what());
  }
  res.reproduced = !holds;
  res.detail = holds ? "condition holds at the witness" : "witness still refutes the condition";
  return res;
}

}  // namespace netgalois
