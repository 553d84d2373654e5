#include "netgalois/galois.hpp"

#include <algorithm>

#include "netgalois/error.hpp"

namespace netgalois {

const char* to_string(TransvectionMode mode) {
  switch (mode) {
    case TransvectionMode::Full:
      return "full";
    case TransvectionMode::Quick:
      return "quick";
    case TransvectionMode::Auto:
      return "auto";
  }
  return "auto";
}

std::shared_ptr<const GaloisContext> GaloisContext::build(const Ring& ring, std::size_t n, std::size_t cap) {
  if (n < 2) throw InputError("the frame needs n >= 2 coordinates");
  std::shared_ptr<GaloisContext> ctx(new GaloisContext());
  ctx->cap_ = cap;
  ctx->modules_ = SubmoduleLattice::build(ring, n);
  ctx->frame_ = std::make_unique<Frame>(ctx->modules_->lattice(), ctx->modules_->coordinates());
  ctx->group_ = Ambient::general_linear(ctx->modules_, cap);
  const Ambient& g = *ctx->group_;
  const Frame& frame = *ctx->frame_;
  const FiniteLattice& l = ctx->modules_->lattice();

  ctx->whole_ = whole_group(g);
  ctx->h_ = fixer(g, frame.atoms());
  ctx->l0prime_ = fixed_lattice(g, ctx->h_.generators);
  ctx->lbar0_ = SublatticeHandle(l, frame.lbar0());

  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Elem> off;
    for (Elem x = 0; x < l.size(); ++x)
      if (frame.support_part(x, i) == l.bottom()) off.push_back(x);
    Bitset mask(g.size());
    for (GIndex h : ctx->h_.members) {
      bool keep = true;
      for (Elem x : off) {
        if (!g.fixes(h, x)) {
          keep = false;
          break;
        }
      }
      if (keep) mask.set(h);
    }
    ctx->h_i_.push_back(subgroup_from_mask(g, mask));
  }

  Bitset lbar_mask(g.size());
  for (GIndex h : ctx->h_.members) {
    bool keep = true;
    for (Elem x : frame.lbar0()) {
      if (!g.fixes(h, x)) {
        keep = false;
        break;
      }
    }
    if (keep) lbar_mask.set(h);
  }
  ctx->g_lbar0_ = subgroup_from_mask(g, lbar_mask);

  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b) continue;
      for (std::uint32_t xi = 1; xi < ring.modulus(); ++xi) {
        Matrix m = identity_matrix(n);
        m(a, b) = xi;
        ctx->elementary_.push_back(g.index_of(m));
      }
    }
  }
  std::sort(ctx->elementary_.begin(), ctx->elementary_.end());
  return ctx;
}

TransvectionMode GaloisContext::resolve(TransvectionMode mode) const noexcept {
  if (mode != TransvectionMode::Auto) return mode;
  return group_->size() <= kFullModeLimit ? TransvectionMode::Full : TransvectionMode::Quick;
}

std::optional<Collection> GaloisContext::transvection_shape(GIndex g, std::size_t i) const {
  const Frame& frame = *frame_;
  const Ambient& grp = *group_;
  for (std::size_t s = 0; s < n(); ++s) {
    if (s == i) continue;
    for (Elem x : frame.below_atom(s))
      if (!grp.fixes(g, x)) return std::nullopt;
  }
  for (Elem x : frame.below_atom(i))
    if (frame.support_part(grp.act(g, x), i) != x) return std::nullopt;
  return frame.support(grp.act(g, frame.atom(i)));
}

bool GaloisContext::is_transvection(GIndex g, std::size_t i, std::size_t j, Elem x) const {
  if (i >= n() || j >= n() || i == j) throw InputError("transvection indices must be distinct and in range");
  if (!lattice().leq(x, frame_->atom(j))) throw InputError("transvection target must lie below e_j");
  const auto shape = transvection_shape(g, i);
  if (!shape) return false;
  const Elem zero = lattice().bottom();
  for (std::size_t k = 0; k < n(); ++k) {
    if (k == i) continue;
    const Elem want = (k == j) ? x : zero;
    if (shape->parts[k] != want) return false;
  }
  return true;
}

const std::vector<GIndex>& GaloisContext::transvection_members(std::size_t i, std::size_t j, Elem x,
                                                                TransvectionMode mode) const {
  if (i >= n() || j >= n() || i == j) throw InputError("transvection indices must be distinct and in range");
  if (!lattice().leq(x, frame_->atom(j))) throw InputError("transvection target must lie below e_j");
  const bool full = resolve(mode) == TransvectionMode::Full;
  std::lock_guard lock(cache_mutex_);
  const auto key = std::make_tuple(i, j, x, full);
  if (auto it = members_cache_.find(key); it != members_cache_.end()) return it->second;

  std::vector<GIndex> out;
  if (full) {
    for (GIndex g = 0; g < group_->size(); ++g)
      if (is_transvection(g, i, j, x)) out.push_back(g);
  } else {
    Bitset seen(group_->size());
    std::vector<GIndex> family{group_->identity()};
    family.insert(family.end(), elementary_.begin(), elementary_.end());
    for (GIndex t : family) {
      for (GIndex h : h_.members) {
        const GIndex g = group_->mul(h, t);
        if (seen.test(g)) continue;
        seen.set(g);
        if (is_transvection(g, i, j, x)) out.push_back(g);
      }
    }
    std::sort(out.begin(), out.end());
  }
  return members_cache_.emplace(key, std::move(out)).first->second;
}

const std::vector<GIndex>& GaloisContext::all_transvections(TransvectionMode mode) const {
  const bool full = resolve(mode) == TransvectionMode::Full;
  {
    std::lock_guard lock(cache_mutex_);
    if (auto it = all_cache_.find(full); it != all_cache_.end()) return it->second;
  }
  Bitset mask(group_->size());
  for (std::size_t i = 0; i < n(); ++i) {
    for (std::size_t j = 0; j < n(); ++j) {
      if (i == j) continue;
      for (Elem x : frame_->below_atom(j))
        for (GIndex g : transvection_members(i, j, x, mode)) mask.set(g);
    }
  }
  std::lock_guard lock(cache_mutex_);
  return all_cache_.emplace(full, mask.to_vector<GIndex>()).first->second;
}

Subgroup GaloisContext::galois_phi(const SublatticeHandle& m) const {
  if (!m.is_subset_of(l0prime_)) throw InputError("phi is defined on sublattices of L_0'");
  return fixer(*group_, m.members());
}

SublatticeHandle GaloisContext::galois_psi(const Subgroup& f) const {
  if (!is_subgroup_of(h_, f)) throw InputError("psi is defined on subgroups containing H");
  return fixed_lattice(*group_, f.generators, l0prime_.members());
}

std::optional<GIndex> GaloisContext::transvection_difference(const Subgroup& f1, const Subgroup& f2,
                                                             TransvectionMode mode) const {
  for (GIndex g : all_transvections(mode))
    if (f1.contains(g) != f2.contains(g)) return g;
  return std::nullopt;
}

bool GaloisContext::same_transvections(const Subgroup& f1, const Subgroup& f2, TransvectionMode mode) const {
  return !transvection_difference(f1, f2, mode).has_value();
}

Subgroup GaloisContext::subgroup_of(std::span<const GIndex> generators) const {
  return close_subgroup(*group_, generators, cap_);
}

}  // namespace netgalois
