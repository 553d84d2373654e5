#include "netgalois/frame.hpp"

#include <algorithm>
#include <string>

#include "netgalois/error.hpp"

namespace netgalois {

Frame::Frame(const FiniteLattice& lattice, std::vector<Elem> atoms)
    : lattice_(&lattice), atoms_(std::move(atoms)) {
  const auto& l = *lattice_;
  if (atoms_.empty()) throw InputError("frame needs at least one atom");
  for (Elem a : atoms_) {
    if (a >= l.size()) throw InputError("frame atom index out of range");
  }

  l0_ = sublattice_generated(l, atoms_);
  const BooleanCheck boolean = is_boolean(l0_);
  std::vector<Elem> sorted_atoms = atoms_;
  std::sort(sorted_atoms.begin(), sorted_atoms.end());
  if (!boolean.is_boolean || boolean.atoms != sorted_atoms) {
    throw InputError("frame atoms do not generate a Boolean sublattice with exactly these atoms");
  }

  m_ = l.dimension(atoms_.front());
  for (Elem a : atoms_) {
    if (l.dimension(a) != m_) {
      throw InputError("frame atoms have different dimensions (" + l.label(atoms_.front()) +
                       " vs " + l.label(a) + ")");
    }
  }

  const std::size_t k = atoms_.size();
  hats_.resize(k);
  for (std::size_t i = 0; i < k; ++i) {
    Elem h = l.bottom();
    for (std::size_t j = 0; j < k; ++j)
      if (j != i) h = l.join(h, atoms_[j]);
    hats_[i] = h;
  }

  support_.resize(l.size() * k);
  in_lbar0_ = Bitset(l.size());
  below_.assign(k, {});
  for (Elem x = 0; x < l.size(); ++x) {
    Elem s = l.bottom();
    for (std::size_t i = 0; i < k; ++i) {
      const Elem part = l.meet(l.join(x, hats_[i]), atoms_[i]);
      support_[x * k + i] = part;
      s = l.join(s, part);
      if (l.leq_unchecked(x, atoms_[i])) below_[i].push_back(x);
    }
    if (s == x) {
      lbar0_.push_back(x);
      in_lbar0_.set(x);
    }
  }
}

Collection Frame::support(Elem x) const {
  if (x >= lattice_->size()) throw std::out_of_range("support: element index out of range");
  Collection c;
  c.parts.assign(support_.begin() + static_cast<std::ptrdiff_t>(x * n()),
                 support_.begin() + static_cast<std::ptrdiff_t>((x + 1) * n()));
  return c;
}

Elem Frame::complement_over(Elem v, std::span<const std::size_t> indices) const {
  const auto& l = *lattice_;
  std::vector<bool> in_set(n(), false);
  for (auto i : indices) {
    if (i >= n()) throw InputError("complement_over: index out of range");
    in_set[i] = true;
  }
  Elem inside = l.bottom(), outside = l.bottom();
  for (std::size_t i = 0; i < n(); ++i) {
    if (in_set[i]) {
      inside = l.join(inside, support_part(v, i));
    } else {
      outside = l.join(outside, support_part(v, i));
    }
  }
  return l.meet(l.join(v, inside), outside);
}

std::optional<Collection> Frame::lbar0_decomposition(Elem x) const {
  if (!in_lbar0(x)) return std::nullopt;
  return support(x);
}

Elem Frame::sum(const Collection& c) const {
  check_collection(c);
  return lattice_->join_all(c.parts);
}

bool Frame::is_collection(const Collection& c) const {
  if (c.parts.size() != n()) return false;
  for (std::size_t i = 0; i < n(); ++i) {
    if (c.parts[i] >= lattice_->size() || !lattice_->leq_unchecked(c.parts[i], atoms_[i]))
      return false;
  }
  return true;
}

void Frame::check_collection(const Collection& c) const {
  if (!is_collection(c)) throw InputError("collection does not belong to this frame");
}

bool Frame::collection_leq(const Collection& a, const Collection& b) const {
  check_collection(a);
  check_collection(b);
  for (std::size_t i = 0; i < n(); ++i)
    if (!lattice_->leq_unchecked(a.parts[i], b.parts[i])) return false;
  return true;
}

Collection Frame::collection_inf(const Collection& a, const Collection& b) const {
  check_collection(a);
  check_collection(b);
  Collection c;
  for (std::size_t i = 0; i < n(); ++i) c.parts.push_back(lattice_->meet(a.parts[i], b.parts[i]));
  return c;
}

Collection Frame::collection_sup(const Collection& a, const Collection& b) const {
  check_collection(a);
  check_collection(b);
  Collection c;
  for (std::size_t i = 0; i < n(); ++i) c.parts.push_back(lattice_->join(a.parts[i], b.parts[i]));
  return c;
}

}  // namespace netgalois
