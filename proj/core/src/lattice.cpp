#include "netgalois/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "netgalois/error.hpp"

namespace netgalois {

namespace {

constexpr int kSchemaVersion = 1;

void check_index(const FiniteLattice& l, Elem x) {
  if (x >= l.size()) throw std::out_of_range("lattice element index out of range");
}

}  // namespace

FiniteLattice::FiniteLattice(std::vector<std::string> labels, std::vector<Elem> meet,
                             std::vector<Elem> join, Elem bottom, Elem top)
    : labels_(std::move(labels)),
      meet_(std::move(meet)),
      join_(std::move(join)),
      bottom_(bottom),
      top_(top) {
  const std::size_t n = labels_.size();
  if (n == 0) throw InputError("lattice must have at least one element");
  if (meet_.size() != n * n || join_.size() != n * n) {
    throw InputError("meet/join tables must be n_elements x n_elements");
  }
  if (bottom_ >= n || top_ >= n) throw InputError("bottom/top index out of range");
  for (std::size_t i = 0; i < n * n; ++i) {
    if (meet_[i] >= n || join_[i] >= n) throw InputError("table entry out of range");
  }
  for (Elem x = 0; x < n; ++x) {
    if (!by_label_.emplace(labels_[x], x).second) {
      throw InputError("duplicate element label: " + labels_[x]);
    }
  }

  down_.assign(n, Bitset(n));
  up_.assign(n, Bitset(n));
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      if (meet_[a * n + b] == a) {
        down_[b].set(a);
        up_[a].set(b);
      }
    }
  }

  // Covers: a < b with nothing strictly in between.
  lower_covers_.assign(n, {});
  for (Elem b = 0; b < n; ++b) {
    down_[b].for_each([&](std::size_t a) {
      if (a == b) return;
      if ((up_[a] & down_[b]).count() == 2) lower_covers_[b].push_back(static_cast<Elem>(a));
    });
  }

  // Rank by increasing down-set size (a topological order of the poset).
  std::vector<Elem> order(n);
  std::iota(order.begin(), order.end(), Elem{0});
  std::vector<std::size_t> down_size(n);
  for (Elem x = 0; x < n; ++x) down_size[x] = down_[x].count();
  std::stable_sort(order.begin(), order.end(),
                   [&](Elem a, Elem b) { return down_size[a] < down_size[b]; });
  rank_.assign(n, 0);
  for (Elem x : order) {
    const auto& covers = lower_covers_[x];
    if (covers.empty()) continue;
    std::size_t r = rank_[covers.front()] + 1;
    for (Elem c : covers) {
      if (rank_[c] + 1 != r) {
        if (graded_) {
          graded_ = false;
          grading_failure_ = "maximal chains to '" + labels_[x] + "' have different lengths";
        }
        r = std::max(r, rank_[c] + 1);
      }
    }
    rank_[x] = r;
  }
}

bool FiniteLattice::leq(Elem a, Elem b) const {
  check_index(*this, a);
  check_index(*this, b);
  return leq_unchecked(a, b);
}

Elem FiniteLattice::meet_all(std::span<const Elem> xs) const {
  Elem acc = top_;
  for (Elem x : xs) acc = meet(acc, x);
  return acc;
}

Elem FiniteLattice::join_all(std::span<const Elem> xs) const {
  Elem acc = bottom_;
  for (Elem x : xs) acc = join(acc, x);
  return acc;
}

std::optional<Elem> FiniteLattice::find(std::string_view label) const {
  auto it = by_label_.find(std::string(label));
  if (it == by_label_.end()) return std::nullopt;
  return it->second;
}

std::size_t FiniteLattice::dimension(Elem x) const {
  check_index(*this, x);
  if (!graded_) throw NotModularError("lattice is not graded: " + grading_failure_);
  return rank_[x];
}

SublatticeHandle::SublatticeHandle(const FiniteLattice& parent, std::vector<Elem> members)
    : parent_(&parent), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool SublatticeHandle::contains(Elem x) const {
  return std::binary_search(members_.begin(), members_.end(), x);
}

bool SublatticeHandle::is_subset_of(const SublatticeHandle& other) const {
  return std::includes(other.members_.begin(), other.members_.end(), members_.begin(),
                       members_.end());
}

std::optional<std::string> lattice_law_violation(const FiniteLattice& l, std::uint64_t seed,
                                                 std::size_t samples) {
  const std::size_t n = l.size();
  for (Elem x = 0; x < n; ++x) {
    if (l.meet(x, x) != x || l.join(x, x) != x) return "idempotence fails at " + l.label(x);
    if (l.meet(l.bottom(), x) != l.bottom()) return "bottom is not least at " + l.label(x);
    if (l.join(l.top(), x) != l.top()) return "top is not greatest at " + l.label(x);
  }
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      if (l.meet(a, b) != l.meet(b, a) || l.join(a, b) != l.join(b, a)) {
        return "commutativity fails at (" + l.label(a) + ", " + l.label(b) + ")";
      }
      if (l.meet(a, l.join(a, b)) != a || l.join(a, l.meet(a, b)) != a) {
        return "absorption fails at (" + l.label(a) + ", " + l.label(b) + ")";
      }
    }
  }
  auto assoc = [&](Elem a, Elem b, Elem c) -> std::optional<std::string> {
    if (l.meet(l.meet(a, b), c) != l.meet(a, l.meet(b, c)) ||
        l.join(l.join(a, b), c) != l.join(a, l.join(b, c))) {
      return "associativity fails at (" + l.label(a) + ", " + l.label(b) + ", " + l.label(c) +
             ")";
    }
    return std::nullopt;
  };
  if (n <= 200) {
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        for (Elem c = 0; c < n; ++c)
          if (auto v = assoc(a, b, c)) return v;
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(n - 1));
    for (std::size_t s = 0; s < samples; ++s) {
      if (auto v = assoc(pick(rng), pick(rng), pick(rng))) return v;
    }
  }
  return std::nullopt;
}

bool modularity_witness_fails(const FiniteLattice& l, const std::array<Elem, 3>& t) {
  const auto [x, y, z] = t;
  return l.leq(x, z) && l.join(x, l.meet(y, z)) != l.meet(l.join(x, y), z);
}

std::optional<std::array<Elem, 3>> modularity_violation(const FiniteLattice& l) {
  const std::size_t n = l.size();
  for (Elem z = 0; z < n; ++z) {
    std::optional<std::array<Elem, 3>> found;
    l.down_set(z).for_each([&](std::size_t xs) {
      if (found) return;
      const auto x = static_cast<Elem>(xs);
      for (Elem y = 0; y < n; ++y) {
        if (l.join(x, l.meet(y, z)) != l.meet(l.join(x, y), z)) {
          found = std::array<Elem, 3>{x, y, z};
          return;
        }
      }
    });
    if (found) return found;
  }
  return std::nullopt;
}

SublatticeHandle sublattice_generated(const FiniteLattice& l, std::span<const Elem> generators) {
  if (generators.empty()) throw InputError("sublattice_generated: empty generator set");
  Bitset in(l.size());
  std::vector<Elem> members;
  std::vector<Elem> pending;
  auto add = [&](Elem x) {
    if (!in.test(x)) {
      in.set(x);
      pending.push_back(x);
    }
  };
  for (Elem g : generators) {
    check_index(l, g);
    add(g);
  }
  while (!pending.empty()) {
    const Elem x = pending.back();
    pending.pop_back();
    members.push_back(x);
    for (std::size_t k = 0; k < members.size(); ++k) {
      add(l.meet(x, members[k]));
      add(l.join(x, members[k]));
    }
  }
  return SublatticeHandle(l, std::move(members));
}

std::vector<SublatticeHandle> enumerate_sublattices(const SublatticeHandle& universe,
                                                    std::size_t bound) {
  const auto& l = universe.parent();
  const auto& u = universe.members();
  if (u.size() > bound || u.size() > 64) {
    throw InputError("enumerate_sublattices: universe has " + std::to_string(u.size()) +
                     " elements (bound " + std::to_string(bound) +
                     "); restrict the universe, e.g. to the H-fixed sublattice");
  }
  const std::size_t k = u.size();
  // Local meet/join on positions within the universe.
  std::vector<std::uint8_t> lm(k * k), lj(k * k);
  auto pos = [&](Elem x) -> std::uint8_t {
    auto it = std::lower_bound(u.begin(), u.end(), x);
    if (it == u.end() || *it != x) throw InputError("enumerate_sublattices: universe not closed");
    return static_cast<std::uint8_t>(it - u.begin());
  };
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      lm[a * k + b] = pos(l.meet(u[a], u[b]));
      lj[a * k + b] = pos(l.join(u[a], u[b]));
    }
  }
  auto close = [&](std::uint64_t mask) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t a = 0; a < k; ++a) {
        if (!((mask >> a) & 1U)) continue;
        for (std::size_t b = a + 1; b < k; ++b) {
          if (!((mask >> b) & 1U)) continue;
          const std::uint64_t add =
              (std::uint64_t{1} << lm[a * k + b]) | (std::uint64_t{1} << lj[a * k + b]);
          if ((mask | add) != mask) {
            mask |= add;
            changed = true;
          }
        }
      }
    }
    return mask;
  };

  std::set<std::uint64_t> seen;
  std::vector<std::uint64_t> queue;
  for (std::size_t a = 0; a < k; ++a) {
    const std::uint64_t m = std::uint64_t{1} << a;
    if (seen.insert(m).second) queue.push_back(m);
  }
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const std::uint64_t s = queue[qi];
    for (std::size_t a = 0; a < k; ++a) {
      if ((s >> a) & 1U) continue;
      const std::uint64_t t = close(s | (std::uint64_t{1} << a));
      if (seen.insert(t).second) queue.push_back(t);
    }
  }

  std::vector<SublatticeHandle> out;
  out.reserve(seen.size());
  for (std::uint64_t m : seen) {
    std::vector<Elem> members;
    for (std::size_t a = 0; a < k; ++a)
      if ((m >> a) & 1U) members.push_back(u[a]);
    out.emplace_back(l, std::move(members));
  }
  std::sort(out.begin(), out.end(), [](const SublatticeHandle& a, const SublatticeHandle& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.members() < b.members();
  });
  return out;
}

std::vector<SublatticeHandle> enumerate_sublattices(const FiniteLattice& lattice,
                                                    std::size_t bound) {
  std::vector<Elem> all(lattice.size());
  std::iota(all.begin(), all.end(), Elem{0});
  return enumerate_sublattices(SublatticeHandle(lattice, std::move(all)), bound);
}

BooleanCheck is_boolean(const SublatticeHandle& sub) {
  const auto& l = sub.parent();
  const auto& s = sub.members();
  BooleanCheck result;
  if (s.empty()) return result;
  const Elem lo = l.meet_all(s);
  const Elem hi = l.join_all(s);
  if (!sub.contains(lo) || !sub.contains(hi)) return result;
  for (Elem a : s) {
    for (Elem b : s) {
      for (Elem c : s) {
        if (l.meet(a, l.join(b, c)) != l.join(l.meet(a, b), l.meet(a, c))) return result;
      }
    }
    bool complemented = false;
    for (Elem b : s) {
      if (l.meet(a, b) == lo && l.join(a, b) == hi) {
        complemented = true;
        break;
      }
    }
    if (!complemented) return result;
  }
  for (Elem a : s) {
    if (a == lo) continue;
    bool cover = true;
    for (Elem b : s) {
      if (b != lo && b != a && l.leq_unchecked(lo, b) && l.leq_unchecked(b, a)) {
        cover = false;
        break;
      }
    }
    if (cover) result.atoms.push_back(a);
  }
  result.is_boolean = true;
  return result;
}

nlohmann::json lattice_to_json(const FiniteLattice& l) {
  const std::size_t n = l.size();
  nlohmann::json meet = nlohmann::json::array(), join = nlohmann::json::array();
  for (Elem a = 0; a < n; ++a) {
    nlohmann::json mrow = nlohmann::json::array(), jrow = nlohmann::json::array();
    for (Elem b = 0; b < n; ++b) {
      mrow.push_back(l.meet(a, b));
      jrow.push_back(l.join(a, b));
    }
    meet.push_back(std::move(mrow));
    join.push_back(std::move(jrow));
  }
  return {{"version", kSchemaVersion}, {"n_elements", n},      {"bottom", l.bottom()},
          {"top", l.top()},            {"labels", l.labels()}, {"meet", std::move(meet)},
          {"join", std::move(join)}};
}

FiniteLattice lattice_from_json(const nlohmann::json& doc) {
  try {
    if (doc.contains("version") && doc.at("version").get<int>() != kSchemaVersion) {
      throw InputError("unsupported lattice schema version");
    }
    const auto n = doc.at("n_elements").get<std::size_t>();
    auto labels = doc.at("labels").get<std::vector<std::string>>();
    if (labels.size() != n) throw InputError("labels length differs from n_elements");
    auto flatten = [&](const nlohmann::json& rows) {
      std::vector<Elem> out;
      out.reserve(n * n);
      if (rows.size() != n) throw InputError("table row count differs from n_elements");
      for (const auto& row : rows) {
        if (row.size() != n) throw InputError("table row length differs from n_elements");
        for (const auto& v : row) out.push_back(v.get<Elem>());
      }
      return out;
    };
    return FiniteLattice(std::move(labels), flatten(doc.at("meet")), flatten(doc.at("join")),
                         doc.at("bottom").get<Elem>(), doc.at("top").get<Elem>());
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed lattice JSON: ") + e.what());
  }
}

std::string lattice_to_dot(const FiniteLattice& l) {
  std::ostringstream os;
  os << "digraph hasse {\n  rankdir=BT;\n";
  for (Elem x = 0; x < l.size(); ++x) {
    os << "  n" << x << " [label=\"" << l.label(x) << "\"];\n";
  }
  for (Elem x = 0; x < l.size(); ++x) {
    for (Elem c : l.lower_covers(x)) os << "  n" << c << " -> n" << x << ";\n";
  }
  os << "}\n";
  return os.str();
}

FiniteLattice pentagon_lattice() {
  // 0 < a < c < 1, 0 < b < 1
  std::vector<std::string> labels{"0", "a", "b", "c", "1"};
  const bool rel[5][5] = {
      {true, true, true, true, true},     // 0
      {false, true, false, true, true},   // a
      {false, false, true, false, true},  // b
      {false, false, false, true, true},  // c
      {false, false, false, false, true}  // 1
  };
  return lattice_from_order(std::move(labels), [&](Elem x, Elem y) { return rel[x][y]; });
}

}  // namespace netgalois
