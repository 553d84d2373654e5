#include "netgalois/nets.hpp"

#include <algorithm>
#include <unordered_map>

#include "netgalois/error.hpp"

namespace netgalois {

const char* to_string(NetMode mode) { return mode == NetMode::Aggregate ? "aggregate" : "per_triple"; }

const char* to_string(TauMode mode) {
  switch (mode) {
    case TauMode::Full:
      return "full";
    case TauMode::Reduced:
      return "transvection_reduced";
    case TauMode::Auto:
      return "auto";
  }
  return "auto";
}

std::vector<std::vector<std::string>> net_labels(const FiniteLattice& lattice, const NetCollection& tau) {
  std::vector<std::vector<std::string>> out(tau.n);
  for (std::size_t i = 0; i < tau.n; ++i)
    for (std::size_t j = 0; j < tau.n; ++j) out[i].push_back(lattice.label(tau(i, j)));
  return out;
}

NetCollection sigma_of(const GaloisContext& ctx, const Subgroup& f, TransvectionMode mode) {
  if (!is_subgroup_of(ctx.H(), f)) throw InputError("sigma(F) requires H <= F");
  const std::size_t n = ctx.n();
  const FiniteLattice& l = ctx.lattice();
  const Frame& frame = ctx.frame();
  NetCollection sigma(n, l.bottom());
  for (std::size_t i = 0; i < n; ++i) sigma(i, i) = frame.atom(i);

  // Members of F to classify: all of F, or only the elementary matrices in F.
  // In quick mode a hit h*t with h in H forces t in F, since H <= F.
  std::vector<GIndex> pool;
  if (ctx.resolve(mode) == TransvectionMode::Full) {
    pool = f.members;
  } else {
    for (GIndex t : ctx.elementary_family())
      if (f.contains(t)) pool.push_back(t);
  }
  for (GIndex g : pool) {
    for (std::size_t i = 0; i < n; ++i) {
      const auto shape = ctx.transvection_shape(g, i);
      if (!shape) continue;
      std::size_t nonzero = 0, where = n;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != i && shape->parts[k] != l.bottom()) {
          ++nonzero;
          where = k;
        }
      }
      if (nonzero == 1) sigma(i, where) = l.join(sigma(i, where), shape->parts[where]);
    }
  }
  return sigma;
}

std::vector<Elem> row_sums(const GaloisContext& ctx, const NetCollection& tau) {
  std::vector<Elem> out;
  for (std::size_t i = 0; i < tau.n; ++i) {
    Elem s = ctx.lattice().bottom();
    for (std::size_t j = 0; j < tau.n; ++j) s = ctx.lattice().join(s, tau(i, j));
    out.push_back(s);
  }
  return out;
}

SublatticeHandle K_of(const GaloisContext& ctx, const NetCollection& tau) {
  std::vector<Elem> gens = row_sums(ctx, tau);
  gens.push_back(ctx.lattice().bottom());
  return sublattice_generated(ctx.lattice(), gens);
}

NetCheck is_net_collection(const GaloisContext& ctx, const NetCollection& tau, NetMode mode) {
  const std::size_t n = ctx.n();
  const FiniteLattice& l = ctx.lattice();
  const Frame& frame = ctx.frame();
  const Ambient& g = ctx.group();
  NetCheck out;
  auto fail = [&](std::string clause, std::string detail) {
    out.valid = false;
    out.clause = std::move(clause);
    out.detail = std::move(detail);
    return out;
  };
  if (tau.n != n || tau.tau.size() != n * n) return fail("1", "wrong order");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (tau(i, j) >= l.size() || !l.leq_unchecked(tau(i, j), frame.atom(j)))
        return fail("1", "entry (" + std::to_string(i) + "," + std::to_string(j) + ") is not below e_j");
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    if (tau(i, i) != frame.atom(i)) return fail("2", "diagonal entry " + std::to_string(i) + " is not e_i");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!ctx.L0prime().contains(tau(i, j)))
        return fail("3", "entry (" + std::to_string(i) + "," + std::to_string(j) + ") is not H-fixed");
    }
  }

  if (mode == NetMode::Aggregate) {
    const Bitset fixes_k = fixer_mask(g, row_sums(ctx, tau));
    for (GIndex a = 0; a < g.size(); ++a) {
      bool below = true;
      for (std::size_t i = 0; i < n && below; ++i) {
        const Elem img = g.act(a, frame.atom(i));
        for (std::size_t j = 0; j < n; ++j) {
          if (!l.leq_unchecked(frame.support_part(img, j), tau(i, j))) {
            below = false;
            break;
          }
        }
      }
      if (below != fixes_k.test(a)) {
        out.witness = a;
        return fail("4", below ? "support bounded by tau but K_tau moved" : "K_tau fixed but support exceeds tau");
      }
    }
    return out;
  }

  for (GIndex a = 0; a < g.size(); ++a) {
    for (std::size_t i = 0; i < n; ++i) {
      const Elem img = g.act(a, frame.atom(i));
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i || !l.leq_unchecked(frame.support_part(img, j), tau(i, j))) continue;
        for (std::size_t k = 0; k < n; ++k) {
          if (k == i || k == j) continue;
          if (!l.leq_unchecked(frame.support_part(g.act(a, tau(k, i)), j), tau(k, j))) {
            out.witness = a;
            out.triple = std::array<std::size_t, 3>{i, j, k};
            return fail("4", "implication fails for the triple");
          }
        }
      }
    }
  }
  return out;
}

NetCollection intersect_nets(const FiniteLattice& lattice, std::span<const NetCollection> nets) {
  if (nets.empty()) throw InputError("intersect_nets needs at least one collection");
  NetCollection out = nets.front();
  for (const auto& t : nets.subspan(1)) {
    if (t.n != out.n) throw InputError("intersect_nets: mixed orders");
    for (std::size_t k = 0; k < out.tau.size(); ++k) out.tau[k] = lattice.meet(out.tau[k], t.tau[k]);
  }
  return out;
}

Subgroup G_of_net(const GaloisContext& ctx, const NetCollection& tau) {
  return fixer(ctx.group(), row_sums(ctx, tau));
}

Subgroup transvection_closure(const GaloisContext& ctx, const NetCollection& tau, TransvectionMode mode) {
  std::vector<GIndex> extra;
  const FiniteLattice& l = ctx.lattice();
  for (std::size_t i = 0; i < ctx.n(); ++i) {
    for (std::size_t j = 0; j < ctx.n(); ++j) {
      if (i == j) continue;
      for (Elem x : ctx.frame().below_atom(j)) {
        if (!l.leq_unchecked(x, tau(i, j))) continue;
        const auto& members = ctx.transvection_members(i, j, x, mode);
        extra.insert(extra.end(), members.begin(), members.end());
      }
    }
  }
  return extend_subgroup(ctx.group(), ctx.H(), extra, ctx.cap());
}

SublatticeHandle overline_L0_of(const GaloisContext& ctx, const Subgroup& f) {
  const Frame& frame = ctx.frame();
  const Ambient& g = ctx.group();
  const std::size_t size = ctx.lattice().size();
  // Orbits under the generators; an element qualifies iff its whole orbit
  // stays inside L̄_0.
  std::vector<int> verdict(size, -1);
  std::vector<Elem> out;
  for (Elem start : frame.lbar0()) {
    if (verdict[start] != -1) {
      if (verdict[start] == 1) out.push_back(start);
      continue;
    }
    std::vector<Elem> orbit{start};
    Bitset seen(size);
    seen.set(start);
    bool inside = true;
    for (std::size_t head = 0; head < orbit.size(); ++head) {
      if (!frame.in_lbar0(orbit[head])) inside = false;
      for (GIndex s : f.generators) {
        const Elem y = g.act(s, orbit[head]);
        if (!seen.test(y)) {
          seen.set(y);
          orbit.push_back(y);
        }
      }
    }
    for (Elem y : orbit) verdict[y] = inside ? 1 : 0;
    if (inside) out.push_back(start);
  }
  std::sort(out.begin(), out.end());
  return SublatticeHandle(ctx.lattice(), std::move(out));
}

Elem tau_of_element(const GaloisContext& ctx, Elem x, std::size_t i, std::size_t j, TauMode mode) {
  const std::size_t n = ctx.n();
  if (i >= n || j >= n) throw InputError("tau_of_element: index out of range");
  if (!ctx.frame().in_lbar0(x) || !ctx.L0prime().contains(x))
    throw InputError("tau_of_element needs x in L̄_0 ∩ L_0'");
  const Ambient& g = ctx.group();
  if (mode == TauMode::Auto) mode = g.size() <= kFullModeLimit ? TauMode::Full : TauMode::Reduced;
  if (mode == TauMode::Full && g.size() > kFullModeLimit) {
    throw CapExceeded("full-mode tau refused: |G| above " + std::to_string(kFullModeLimit), g.size());
  }
  const FiniteLattice& l = ctx.lattice();
  const Frame& frame = ctx.frame();
  const Elem xi = frame.support_part(x, i);
  const Elem xj = frame.support_part(x, j);

  // For each premise value a = [f(e_i)]_j record whether some f with that
  // value breaks the conclusion.
  Bitset breaks(l.size());
  auto visit = [&](GIndex f) {
    const Elem a = frame.support_part(g.act(f, frame.atom(i)), j);
    if (!l.leq_unchecked(frame.support_part(g.act(f, xi), j), xj)) breaks.set(a);
  };
  if (mode == TauMode::Full) {
    for (GIndex f = 0; f < g.size(); ++f) visit(f);
  } else {
    for (GIndex f : ctx.H().members) visit(f);
    for (GIndex f : ctx.elementary_family()) visit(f);
  }

  std::vector<Elem> admissible;
  for (Elem u : frame.below_atom(j)) {
    bool ok = true;
    breaks.for_each([&](std::size_t a) {
      if (l.leq_unchecked(static_cast<Elem>(a), u)) ok = false;
    });
    if (ok) admissible.push_back(u);
  }
  const Elem top = l.join_all(admissible);
  if (std::find(admissible.begin(), admissible.end(), top) == admissible.end()) {
    throw Error("no largest u satisfying the (△) condition for x = " + l.label(x));
  }
  return top;
}

NetCollection tau_net_of_element(const GaloisContext& ctx, Elem x, TauMode mode) {
  NetCollection out(ctx.n());
  for (std::size_t i = 0; i < ctx.n(); ++i)
    for (std::size_t j = 0; j < ctx.n(); ++j) out(i, j) = tau_of_element(ctx, x, i, j, mode);
  return out;
}

NetCollection tau_net_of_sublattice(const GaloisContext& ctx, const SublatticeHandle& m, TauMode mode) {
  std::vector<NetCollection> nets;
  for (Elem x : m.members()) nets.push_back(tau_net_of_element(ctx, x, mode));
  return intersect_nets(ctx.lattice(), nets);
}

std::vector<NetCollection> candidate_nets(const GaloisContext& ctx) {
  const std::size_t n = ctx.n();
  const Frame& frame = ctx.frame();
  std::vector<std::vector<Elem>> choices(n);
  for (std::size_t j = 0; j < n; ++j)
    for (Elem x : frame.below_atom(j))
      if (ctx.L0prime().contains(x)) choices[j].push_back(x);

  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) slots.emplace_back(i, j);

  std::vector<NetCollection> out;
  NetCollection cur(n);
  for (std::size_t i = 0; i < n; ++i) cur(i, i) = frame.atom(i);
  std::vector<std::size_t> pick(slots.size(), 0);
  while (true) {
    for (std::size_t s = 0; s < slots.size(); ++s) cur(slots[s].first, slots[s].second) = choices[slots[s].second][pick[s]];
    out.push_back(cur);
    std::size_t s = slots.size();
    while (s > 0) {
      --s;
      if (++pick[s] < choices[slots[s].second].size()) break;
      pick[s] = 0;
      if (s == 0) {
        std::sort(out.begin(), out.end());
        return out;
      }
    }
    if (slots.empty()) return out;
  }
}

SublatticeHandle closed_sublattice_of(const GaloisContext& ctx, const NetCollection& tau) {
  return ctx.galois_psi(G_of_net(ctx, tau));
}

NetCatalog::NetCatalog(std::shared_ptr<const GaloisContext> ctx, bool with_classes, std::size_t class_bound)
    : ctx_(std::move(ctx)) {
  const GaloisContext& c = *ctx_;
  candidates_ = candidate_nets(c);
  for (const auto& tau : candidates_) {
    checks_.push_back(is_net_collection(c, tau, NetMode::Aggregate));
    if (!checks_.back().valid) continue;
    Entry e;
    e.tau = tau;
    e.k = K_of(c, tau);
    e.group = G_of_net(c, tau);
    e.closed = c.galois_psi(e.group);
    nets_.push_back(std::move(e));
  }
  normalizer_once_ = std::make_unique<std::once_flag[]>(nets_.size());
  normalizers_.resize(nets_.size());

  if (!with_classes) {
    classes_error_ = "classes not requested";
    return;
  }
  try {
    sublattices_ = enumerate_sublattices(c.L0prime(), class_bound);
  } catch (const InputError& e) {
    classes_error_ = e.what();
    return;
  }
  std::unordered_map<Bitset, std::size_t, BitsetHash> by_fixer;
  class_index_.resize(sublattices_.size());
  for (std::size_t s = 0; s < sublattices_.size(); ++s) {
    Bitset mask = fixer_mask(c.group(), sublattices_[s].members());
    auto [it, inserted] = by_fixer.emplace(mask, classes_.size());
    if (inserted) {
      EquivClass cls;
      cls.common_fixer = mask == c.G().mask ? c.G() : subgroup_from_mask(c.group(), mask);
      cls.closure = c.galois_psi(cls.common_fixer);
      classes_.push_back(std::move(cls));
    }
    classes_[it->second].members.push_back(sublattices_[s]);
    class_index_[s] = it->second;
  }
  has_classes_ = true;
}

std::optional<std::size_t> NetCatalog::find(const NetCollection& tau) const {
  for (std::size_t i = 0; i < nets_.size(); ++i)
    if (nets_[i].tau == tau) return i;
  return std::nullopt;
}

const Subgroup& NetCatalog::normalizer(std::size_t net) const {
  std::call_once(normalizer_once_[net], [&] {
    normalizers_[net] = netgalois::normalizer(ctx_->group(), nets_.at(net).group, ctx_->G());
  });
  return normalizers_[net];
}

const std::vector<EquivClass>& NetCatalog::classes() const {
  if (!has_classes_) throw InputError("equivalence classes unavailable: " + classes_error_);
  return classes_;
}

std::size_t NetCatalog::class_of(const SublatticeHandle& m) const {
  if (!has_classes_) throw InputError("equivalence classes unavailable: " + classes_error_);
  for (std::size_t s = 0; s < sublattices_.size(); ++s)
    if (sublattices_[s] == m) return class_index_[s];
  throw InputError("not a sublattice of L_0'");
}

}  // namespace netgalois
