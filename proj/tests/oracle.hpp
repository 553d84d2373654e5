#pragma once

// Brute-force reference computations. These work on raw vectors and matrices
// over Z/q and never call the canonical-form or closure code they check.

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "netgalois/frame.hpp"
#include "netgalois/lattice.hpp"

namespace oracle {

struct Space {
  std::uint32_t q;
  std::size_t n;
  std::size_t count() const {
    std::size_t c = 1;
    for (std::size_t i = 0; i < n; ++i) c *= q;
    return c;
  }
  std::vector<std::uint32_t> decode(std::size_t code) const {
    std::vector<std::uint32_t> v(n);
    for (std::size_t i = 0; i < n; ++i) {
      v[i] = code % q;
      code /= q;
    }
    return v;
  }
  std::size_t encode(const std::vector<std::uint32_t>& v) const {
    std::size_t c = 0;
    for (std::size_t i = n; i-- > 0;) c = c * q + v[i] % q;
    return c;
  }
  std::size_t add(std::size_t a, std::size_t b) const {
    std::size_t c = 0, w = 1;
    for (std::size_t i = 0; i < n; ++i, a /= q, b /= q, w *= q) c += ((a % q + b % q) % q) * w;
    return c;
  }
  std::size_t scale(std::uint32_t r, std::size_t a) const {
    std::size_t c = 0, w = 1;
    for (std::size_t i = 0; i < n; ++i, a /= q, w *= q) c += ((a % q) * r % q) * w;
    return c;
  }
};

using Module = std::vector<char>;  // membership over vector codes

inline Module cyclic(const Space& s, std::size_t v) {
  Module m(s.count(), 0);
  for (std::uint32_t r = 0; r < s.q; ++r) m[s.scale(r, v)] = 1;
  return m;
}

inline std::vector<std::size_t> elements(const Module& a) {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < a.size(); ++x)
    if (a[x]) out.push_back(x);
  return out;
}

inline Module sum(const Space& s, const Module& a, const Module& b) {
  Module m(s.count(), 0);
  const auto ys = elements(b);
  for (std::size_t x : elements(a))
    for (std::size_t y : ys) m[s.add(x, y)] = 1;
  return m;
}

// Every submodule of (Z/q)^n is a finite sum of cyclic submodules.
inline std::set<Module> all_submodules(const Space& s) {
  std::set<Module> cyc;
  for (std::size_t v = 0; v < s.count(); ++v) cyc.insert(cyclic(s, v));
  std::set<Module> all = cyc;
  std::vector<Module> frontier(cyc.begin(), cyc.end());
  while (!frontier.empty()) {
    std::vector<Module> next;
    for (const auto& a : frontier)
      for (const auto& c : cyc) {
        Module m = sum(s, a, c);
        if (all.insert(m).second) next.push_back(std::move(m));
      }
    frontier = std::move(next);
  }
  return all;
}

// Matrices as row-major entry vectors; invertible iff the map on vectors is
// a bijection.
inline bool bijective(const Space& s, const std::vector<std::uint32_t>& m) {
  std::vector<char> hit(s.count(), 0);
  for (std::size_t v = 0; v < s.count(); ++v) {
    const auto x = s.decode(v);
    std::vector<std::uint32_t> y(s.n, 0);
    for (std::size_t i = 0; i < s.n; ++i)
      for (std::size_t j = 0; j < s.n; ++j) y[i] = (y[i] + m[i * s.n + j] * x[j]) % s.q;
    const auto c = s.encode(y);
    if (hit[c]) return false;
    hit[c] = 1;
  }
  return true;
}

template <class F>
void for_each_matrix(const Space& s, F&& f) {
  const Space entries{s.q, s.n * s.n};
  for (std::size_t c = 0; c < entries.count(); ++c) f(entries.decode(c));
}

struct GroupCounts {
  std::size_t gl = 0;
  std::size_t diagonal = 0;
};

inline GroupCounts count_groups(const Space& s) {
  GroupCounts out;
  for_each_matrix(s, [&](const std::vector<std::uint32_t>& m) {
    if (!bijective(s, m)) return;
    ++out.gl;
    bool diag = true;
    for (std::size_t i = 0; i < s.n; ++i)
      for (std::size_t j = 0; j < s.n; ++j)
        if (i != j && m[i * s.n + j] != 0) diag = false;
    if (diag) ++out.diagonal;
  });
  return out;
}

// p-adic valuation capped at k (x = 0 gives k).
inline std::uint32_t valuation(std::uint32_t x, std::uint32_t p, std::uint32_t k) {
  std::uint32_t a = 0;
  while (a < k && x % p == 0) {
    x /= p;
    ++a;
  }
  return a;
}

// Order of {g in GL : v(g_ij) >= exps[i][j] off the diagonal}.
inline std::size_t net_group_order(const Space& s, std::uint32_t p, std::uint32_t k,
                                   const std::vector<std::uint32_t>& exps) {
  std::size_t c = 0;
  for_each_matrix(s, [&](const std::vector<std::uint32_t>& m) {
    for (std::size_t i = 0; i < s.n; ++i)
      for (std::size_t j = 0; j < s.n; ++j)
        if (i != j && valuation(m[i * s.n + j], p, k) < exps[i * s.n + j]) return;
    if (bijective(s, m)) ++c;
  });
  return c;
}

// Product law for exponent matrices: a_ii = 0, min(k, a_ir + a_rj) >= a_ij.
inline bool product_law(std::size_t n, std::uint32_t k, const std::vector<std::uint32_t>& a) {
  for (std::size_t i = 0; i < n; ++i)
    if (a[i * n + i] != 0) return false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t j = 0; j < n; ++j)
        if (std::min(k, a[i * n + r] + a[r * n + j]) < a[i * n + j]) return false;
  return true;
}

// Minimal coordinate tuple (x_1..x_n), x_i <= e_i, with x <= sum x_i, found by
// scanning every tuple. Returns empty if there is no unique minimum.
inline std::vector<netgalois::Elem> minimal_support(const netgalois::FiniteLattice& l,
                                                    const std::vector<netgalois::Elem>& atoms,
                                                    netgalois::Elem x) {
  using netgalois::Elem;
  const std::size_t n = atoms.size();
  std::vector<std::vector<Elem>> below(n);
  for (std::size_t i = 0; i < n; ++i)
    for (Elem y = 0; y < l.size(); ++y)
      if (l.leq(y, atoms[i])) below[i].push_back(y);
  std::vector<std::vector<Elem>> covering;
  std::vector<std::size_t> idx(n, 0);
  while (true) {
    std::vector<Elem> t(n);
    Elem s = l.bottom();
    for (std::size_t i = 0; i < n; ++i) {
      t[i] = below[i][idx[i]];
      s = l.join(s, t[i]);
    }
    if (l.leq(x, s)) covering.push_back(t);
    std::size_t i = 0;
    while (i < n && ++idx[i] == below[i].size()) idx[i++] = 0;
    if (i == n) break;
  }
  for (const auto& t : covering) {
    bool least = true;
    for (const auto& u : covering)
      for (std::size_t i = 0; i < n && least; ++i)
        if (!l.leq(t[i], u[i])) least = false;
    if (least) return t;
  }
  return {};
}

// Number of nonempty subsets of `members` closed under meet and join.
inline std::size_t count_sublattices(const netgalois::FiniteLattice& l, const std::vector<netgalois::Elem>& members) {
  const std::size_t m = members.size();
  std::size_t count = 0;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
    std::vector<char> in(l.size(), 0);
    for (std::size_t i = 0; i < m; ++i)
      if (mask >> i & 1) in[members[i]] = 1;
    bool closed = true;
    for (std::size_t a = 0; a < m && closed; ++a)
      for (std::size_t b = 0; b < m && closed; ++b)
        if ((mask >> a & 1) && (mask >> b & 1))
          closed = in[l.meet(members[a], members[b])] && in[l.join(members[a], members[b])];
    if (closed) ++count;
  }
  return count;
}

}  // namespace oracle
