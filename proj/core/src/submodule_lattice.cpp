#include "netgalois/submodule_lattice.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <tuple>

#include "netgalois/error.hpp"
#include "netgalois/howell.hpp"

namespace netgalois {
namespace {

Bitset span_vectors(const Ring& ring, const MatrixCodec& codec, const std::vector<Vec>& rows) {
  const std::size_t n = codec.n();
  Bitset set(codec.vector_space());
  std::vector<Vec> members{Vec{}};
  set.set(0);
  for (const Vec& r : rows) {
    const std::size_t existing = members.size();
    for (std::size_t m = 0; m < existing; ++m) {
      Vec v = members[m];
      for (std::uint32_t t = 1; t < ring.modulus(); ++t) {
        for (std::size_t i = 0; i < n; ++i) v[i] = ring.add(v[i], r[i]);
        const std::uint32_t code = codec.encode_vec(v);
        if (!set.test(code)) {
          set.set(code);
          members.push_back(v);
        }
      }
    }
  }
  return set;
}

}  // namespace

SubmoduleLattice::SubmoduleLattice(const Ring& ring, std::size_t n)
    : ring_(ring), n_(n), codec_(ring.modulus(), n) {}

std::shared_ptr<const SubmoduleLattice> SubmoduleLattice::build(const Ring& ring, std::size_t n,
                                                                std::size_t cap) {
  std::shared_ptr<SubmoduleLattice> self(new SubmoduleLattice(ring, n));
  const MatrixCodec& codec = self->codec_;
  const auto vector_count = static_cast<std::uint32_t>(codec.vector_space());

  // Discovery by breadth-first closure.
  std::vector<std::vector<Vec>> found{{}};
  std::unordered_map<std::string, std::size_t> seen{{howell_label(n, {}), 0}};
  for (std::size_t x = 0; x < found.size(); ++x) {
    for (std::uint32_t code = 1; code < vector_count; ++code) {
      std::vector<Vec> rows = found[x];
      rows.push_back(codec.decode_vec(code));
      rows = howell_form(ring, n, std::move(rows));
      auto label = howell_label(n, rows);
      if (seen.emplace(std::move(label), found.size()).second) {
        if (found.size() >= cap) throw CapExceeded("submodule enumeration exceeded cap", found.size());
        found.push_back(std::move(rows));
      }
    }
  }

  // Canonical order.
  const std::size_t count = found.size();
  std::vector<std::size_t> order(count);
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::size_t> len(count);
  for (std::size_t i = 0; i < count; ++i) len[i] = howell_length(ring, n, found[i]);
  auto key = [&](std::size_t i) {
    std::vector<std::uint32_t> flat;
    for (const auto& r : found[i])
      for (std::size_t c = 0; c < n; ++c) flat.push_back(r[c]);
    return std::make_tuple(len[i], howell_pivots(n, found[i]), flat);
  };
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return key(a) < key(b); });

  std::vector<std::string> labels(count);
  self->rows_.resize(count);
  self->length_.resize(count);
  self->vectors_.resize(count);
  for (std::size_t pos = 0; pos < count; ++pos) {
    const std::size_t src = order[pos];
    self->rows_[pos] = found[src];
    self->length_[pos] = len[src];
    labels[pos] = howell_label(n, found[src]);
    self->by_label_.emplace(labels[pos], static_cast<Elem>(pos));
    self->vectors_[pos] = span_vectors(ring, codec, found[src]);
  }

  std::unordered_map<Bitset, Elem, BitsetHash> by_vectors;
  for (Elem x = 0; x < count; ++x) by_vectors.emplace(self->vectors_[x], x);

  self->cyclic_.assign(vector_count, 0);
  for (std::uint32_t code = 1; code < vector_count; ++code) {
    self->cyclic_[code] = self->element_of({codec.decode_vec(code)});
  }

  std::vector<Elem> meet(count * count), join(count * count);
  for (Elem a = 0; a < count; ++a) {
    for (Elem b = a; b < count; ++b) {
      const Elem m = by_vectors.at(self->vectors_[a] & self->vectors_[b]);
      std::vector<Vec> stacked = self->rows_[a];
      stacked.insert(stacked.end(), self->rows_[b].begin(), self->rows_[b].end());
      const Elem j = self->element_of(std::move(stacked));
      meet[a * count + b] = meet[b * count + a] = m;
      join[a * count + b] = join[b * count + a] = j;
    }
  }

  Elem top = 0;
  for (Elem x = 0; x < count; ++x)
    if (self->length_[x] > self->length_[top]) top = x;

  self->lattice_ = std::make_unique<FiniteLattice>(std::move(labels), std::move(meet), std::move(join),
                                                   Elem{0}, top);

  for (std::size_t i = 0; i < n; ++i) {
    Vec unit{};
    unit[i] = 1;
    self->coordinates_.push_back(self->element_of({unit}));
  }
  return self;
}

Elem SubmoduleLattice::element_of(std::vector<Vec> rows) const {
  const auto canonical = howell_form(ring_, n_, std::move(rows));
  const auto it = by_label_.find(howell_label(n_, canonical));
  if (it == by_label_.end()) {
    throw ConsistencyError("canonical form " + howell_label(n_, canonical) + " missing from lattice");
  }
  return it->second;
}

Elem SubmoduleLattice::image(const Matrix& g, Elem x) const {
  const FiniteLattice& l = *lattice_;
  Elem out = l.bottom();
  for (const Vec& r : rows_[x]) out = l.join(out, cyclic_[codec_.encode_vec(apply(ring_, g, r))]);
  return out;
}

bool SubmoduleLattice::fixes(const Matrix& g, Elem x) const {
  const Bitset& set = vectors_[x];
  for (const Vec& r : rows_[x])
    if (!set.test(codec_.encode_vec(apply(ring_, g, r)))) return false;
  return true;
}

}  // namespace netgalois
