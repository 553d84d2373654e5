#include "netgalois/group.hpp"

#include <cstdlib>
#include <limits>
#include <string>

#include "netgalois/error.hpp"

namespace netgalois {
namespace {

constexpr GIndex kNone = std::numeric_limits<GIndex>::max();
constexpr std::uint64_t kDenseIndexLimit = std::uint64_t{1} << 24;
constexpr std::size_t kCayleyLimit = 4096;
constexpr std::uint64_t kPermLimit = std::uint64_t{1} << 24;

}  // namespace

std::size_t cap_from_env(std::size_t fallback) {
  if (const char* s = std::getenv("NETGALOIS_CAP")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(s, &end, 10);
    if (end != s && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return fallback;
}

std::uint64_t Ambient::general_linear_order(const Ring& ring, std::size_t n) {
  const std::uint64_t p = ring.p();
  std::uint64_t pn = 1;
  for (std::size_t i = 0; i < n; ++i) pn *= p;
  std::uint64_t order = 1;
  std::uint64_t pi = 1;
  for (std::size_t i = 0; i < n; ++i) {
    order *= (pn - pi);
    pi *= p;
  }
  for (std::size_t e = 0; e < (ring.k() - 1) * n * n; ++e) order *= p;
  return order;
}

Ambient::Ambient(std::shared_ptr<const SubmoduleLattice> modules) : modules_(std::move(modules)) {}

std::shared_ptr<const Ambient> Ambient::general_linear(std::shared_ptr<const SubmoduleLattice> modules,
                                                       std::size_t cap) {
  const Ring& ring = modules->ring();
  const std::size_t n = modules->n();
  const std::uint64_t expected = general_linear_order(ring, n);
  if (expected > cap) {
    throw CapExceeded("GL(" + std::to_string(n) + ", " + ring.describe() + ") has " +
                          std::to_string(expected) + " elements, above the cap",
                      0);
  }
  std::shared_ptr<Ambient> g(new Ambient(std::move(modules)));
  const MatrixCodec& codec = g->modules_->codec();
  const std::uint64_t space = codec.code_space();

  g->codes_.reserve(expected);
  g->entries_.reserve(expected * n * n);
  for (std::uint64_t c = 0; c < space; ++c) {
    const Matrix m = codec.decode(c);
    if (!is_invertible(ring, m)) continue;
    g->codes_.push_back(c);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) g->entries_.push_back(static_cast<std::uint16_t>(m(i, j)));
  }
  if (g->codes_.size() != expected) {
    throw ConsistencyError("GL enumeration found " + std::to_string(g->codes_.size()) +
                           " elements, expected " + std::to_string(expected));
  }

  const std::size_t size = g->codes_.size();
  if (space <= kDenseIndexLimit) {
    g->dense_index_.assign(space, kNone);
    for (GIndex i = 0; i < size; ++i) g->dense_index_[g->codes_[i]] = i;
  } else {
    g->sparse_index_.reserve(size);
    for (GIndex i = 0; i < size; ++i) g->sparse_index_.emplace(g->codes_[i], i);
  }
  g->identity_ = *g->find_code(codec.encode(identity_matrix(n)));

  g->inverse_.resize(size);
  for (GIndex i = 0; i < size; ++i) {
    const auto inv = inverse(ring, g->matrix(i));
    g->inverse_[i] = *g->find_code(codec.encode(*inv));
  }

  if (size <= kCayleyLimit) {
    std::vector<std::uint16_t> table(size * size);
    for (GIndex a = 0; a < size; ++a)
      for (GIndex b = 0; b < size; ++b) table[a * size + b] = static_cast<std::uint16_t>(g->mul(a, b));
    g->cayley_ = std::move(table);
  }

  const std::size_t count = g->modules_->size();
  if (static_cast<std::uint64_t>(size) * count <= kPermLimit && count <= 65535) {
    g->perm_.resize(size * count);
    for (GIndex a = 0; a < size; ++a) {
      const Matrix m = g->matrix(a);
      for (Elem x = 0; x < count; ++x)
        g->perm_[static_cast<std::size_t>(a) * count + x] = static_cast<std::uint16_t>(g->modules_->image(m, x));
    }
  }

  g->stab_once_ = std::make_unique<std::once_flag[]>(count);
  g->stab_.resize(count);
  return g;
}

Matrix Ambient::matrix(GIndex g) const {
  Matrix m;
  m.n = n();
  for (std::size_t i = 0; i < n(); ++i)
    for (std::size_t j = 0; j < n(); ++j) m(i, j) = entry(g, i, j);
  return m;
}

std::optional<GIndex> Ambient::find_code(std::uint64_t code) const {
  if (!dense_index_.empty()) {
    if (code >= dense_index_.size() || dense_index_[code] == kNone) return std::nullopt;
    return dense_index_[code];
  }
  const auto it = sparse_index_.find(code);
  if (it == sparse_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<GIndex> Ambient::find(const Matrix& m) const {
  if (m.n != n()) return std::nullopt;
  Matrix r = m;
  for (auto& x : r.e) x %= ring().modulus();
  return find_code(modules_->codec().encode(r));
}

GIndex Ambient::index_of(const Matrix& m) const {
  if (m.n != n()) throw InputError("matrix has order " + std::to_string(m.n) + ", expected " + std::to_string(n()));
  const auto idx = find(m);
  if (!idx) throw InputError("matrix " + to_string(m) + " is not invertible over " + ring().describe());
  return *idx;
}

GIndex Ambient::mul(GIndex a, GIndex b) const noexcept {
  const std::size_t size = codes_.size();
  if (!cayley_.empty()) return cayley_[static_cast<std::size_t>(a) * size + b];
  const std::size_t nn = n();
  const std::uint32_t q = ring().modulus();
  const std::uint16_t* x = &entries_[static_cast<std::size_t>(a) * nn * nn];
  const std::uint16_t* y = &entries_[static_cast<std::size_t>(b) * nn * nn];
  std::uint64_t code = 0;
  for (std::size_t i = 0; i < nn; ++i) {
    for (std::size_t j = 0; j < nn; ++j) {
      std::uint64_t s = 0;
      for (std::size_t k = 0; k < nn; ++k) s += static_cast<std::uint64_t>(x[i * nn + k]) * y[k * nn + j];
      code = code * q + s % q;
    }
  }
  if (!dense_index_.empty()) return dense_index_[code];
  return sparse_index_.find(code)->second;
}

Elem Ambient::act(GIndex g, Elem x) const {
  if (!perm_.empty()) return perm_[static_cast<std::size_t>(g) * modules_->size() + x];
  return modules_->image(matrix(g), x);
}

bool Ambient::fixes(GIndex g, Elem x) const {
  if (!perm_.empty()) return perm_[static_cast<std::size_t>(g) * modules_->size() + x] == x;
  return modules_->fixes(matrix(g), x);
}

const Bitset& Ambient::stabilizer(Elem x) const {
  if (x >= modules_->size()) throw std::out_of_range("stabilizer: element index out of range");
  std::call_once(stab_once_[x], [&] {
    Bitset b(size());
    for (GIndex g = 0; g < size(); ++g)
      if (fixes(g, x)) b.set(g);
    stab_[x] = std::move(b);
  });
  return stab_[x];
}

namespace {

// Closes `members`/`mask` (already closed under `gens`) after appending the
// generators in `extra`.
void extend_closure(const Ambient& g, std::vector<GIndex>& members, Bitset& mask,
                    std::vector<GIndex>& gens, std::span<const GIndex> extra, std::size_t cap) {
  for (GIndex s : extra) {
    if (mask.test(s)) continue;
    gens.push_back(s);
    std::size_t head = members.size();
    const std::size_t old = members.size();
    for (std::size_t i = 0; i < old; ++i) {
      const GIndex y = g.mul(members[i], s);
      if (!mask.test(y)) {
        mask.set(y);
        members.push_back(y);
      }
    }
    while (head < members.size()) {
      const GIndex x = members[head++];
      for (GIndex t : gens) {
        const GIndex y = g.mul(x, t);
        if (!mask.test(y)) {
          mask.set(y);
          members.push_back(y);
        }
      }
      if (members.size() > cap) {
        throw CapExceeded("subgroup closure exceeded cap of " + std::to_string(cap), members.size());
      }
    }
  }
}

Subgroup finish(Bitset mask, std::vector<GIndex> gens) {
  Subgroup s;
  s.members = mask.to_vector<GIndex>();
  s.mask = std::move(mask);
  s.generators = std::move(gens);
  return s;
}

}  // namespace

Subgroup close_subgroup(const Ambient& g, std::span<const GIndex> generators, std::size_t cap) {
  Bitset mask(g.size());
  mask.set(g.identity());
  std::vector<GIndex> members{g.identity()};
  std::vector<GIndex> gens;
  for (GIndex s : generators)
    if (s >= g.size()) throw InputError("generator index out of range");
  extend_closure(g, members, mask, gens, generators, cap);
  return finish(std::move(mask), std::move(gens));
}

Subgroup extend_subgroup(const Ambient& g, const Subgroup& base, std::span<const GIndex> extra,
                         std::size_t cap) {
  std::vector<GIndex> members = base.members;
  Bitset mask = base.mask;
  std::vector<GIndex> gens = base.generators;
  extend_closure(g, members, mask, gens, extra, cap);
  return finish(std::move(mask), std::move(gens));
}

Subgroup subgroup_from_mask(const Ambient& g, const Bitset& mask) {
  if (mask.size() != g.size() || !mask.test(g.identity())) {
    throw ConsistencyError("mask is not a subgroup of the ambient group");
  }
  Bitset cur(g.size());
  cur.set(g.identity());
  std::vector<GIndex> members{g.identity()};
  std::vector<GIndex> gens;
  const std::size_t target = mask.count();
  std::size_t scan = 0;
  const auto candidates = mask.to_vector<GIndex>();
  while (members.size() < target) {
    while (cur.test(candidates[scan])) ++scan;
    const GIndex s = candidates[scan];
    try {
      extend_closure(g, members, cur, gens, std::span<const GIndex>(&s, 1), target);
    } catch (const CapExceeded&) {
      throw ConsistencyError("mask is not closed under multiplication");
    }
  }
  if (!(cur == mask)) throw ConsistencyError("mask is not closed under multiplication");
  Subgroup out;
  out.members = candidates;
  out.mask = mask;
  out.generators = std::move(gens);
  return out;
}

Subgroup whole_group(const Ambient& g) {
  Bitset all(g.size());
  all.set_all();
  return subgroup_from_mask(g, all);
}

Bitset fixer_mask(const Ambient& g, std::span<const Elem> elements) {
  Bitset mask(g.size());
  mask.set_all();
  for (Elem x : elements) mask &= g.stabilizer(x);
  return mask;
}

Subgroup fixer(const Ambient& g, std::span<const Elem> elements) {
  return subgroup_from_mask(g, fixer_mask(g, elements));
}

SublatticeHandle fixed_lattice(const Ambient& g, std::span<const GIndex> generators,
                               std::span<const Elem> universe) {
  std::vector<Elem> out;
  for (Elem x : universe) {
    bool fixed = true;
    for (GIndex s : generators) {
      if (!g.fixes(s, x)) {
        fixed = false;
        break;
      }
    }
    if (fixed) out.push_back(x);
  }
  return SublatticeHandle(g.lattice(), std::move(out));
}

SublatticeHandle fixed_lattice(const Ambient& g, std::span<const GIndex> generators) {
  std::vector<Elem> all(g.lattice().size());
  for (Elem x = 0; x < all.size(); ++x) all[x] = x;
  return fixed_lattice(g, generators, all);
}

bool normalizes(const Ambient& g, GIndex f, const Subgroup& s) {
  for (GIndex t : s.generators)
    if (!s.contains(g.conj(f, t))) return false;
  return true;
}

Subgroup normalizer(const Ambient& g, const Subgroup& s, const Subgroup& ambient) {
  Bitset mask(g.size());
  for (GIndex a : ambient.members)
    if (normalizes(g, a, s)) mask.set(a);
  return subgroup_from_mask(g, mask);
}

bool is_subgroup_of(const Subgroup& s, const Subgroup& f) { return s.mask.is_subset_of(f.mask); }

bool is_normal_in(const Ambient& g, const Subgroup& s, const Subgroup& f) {
  if (!is_subgroup_of(s, f)) return false;
  for (GIndex a : f.generators)
    if (!normalizes(g, a, s)) return false;
  return true;
}

}  // namespace netgalois
