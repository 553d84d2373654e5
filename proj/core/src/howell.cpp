#include "netgalois/howell.hpp"

#include <algorithm>

namespace netgalois {
namespace {

bool is_zero(const Vec& v, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    if (v[i] != 0) return false;
  return true;
}

Vec scale(const Ring& ring, const Vec& v, std::uint32_t s, std::size_t n) {
  Vec w{};
  for (std::size_t i = 0; i < n; ++i) w[i] = ring.mul(v[i], s);
  return w;
}

// a - s*b
Vec sub_multiple(const Ring& ring, const Vec& a, const Vec& b, std::uint32_t s, std::size_t n) {
  Vec w{};
  for (std::size_t i = 0; i < n; ++i) w[i] = ring.sub(a[i], ring.mul(s, b[i]));
  return w;
}

std::size_t leading(const Vec& v, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    if (v[i] != 0) return i;
  return n;
}

}  // namespace

std::vector<Vec> howell_form(const Ring& ring, std::size_t n, std::vector<Vec> rows) {
  const std::uint32_t k = ring.k();
  std::vector<Vec> work;
  for (auto& r : rows) {
    for (std::size_t i = 0; i < n; ++i) r[i] %= ring.modulus();
    if (!is_zero(r, n)) work.push_back(r);
  }

  std::vector<Vec> out;
  for (std::size_t c = 0; c < n && !work.empty(); ++c) {
    std::size_t best = work.size();
    std::uint32_t best_v = k;
    for (std::size_t r = 0; r < work.size(); ++r) {
      const std::uint32_t v = ring.valuation(work[r][c]);
      if (v < best_v) {
        best_v = v;
        best = r;
      }
    }
    if (best == work.size()) continue;

    Vec pivot = work[best];
    // pivot[c] = p^v * u with u a unit; scale by u^-1.
    const std::uint32_t pv = ring.pow_p(best_v);
    const std::uint32_t unit = pivot[c] / pv;
    pivot = scale(ring, pivot, ring.inv(unit), n);

    std::vector<Vec> next;
    next.reserve(work.size());
    for (std::size_t r = 0; r < work.size(); ++r) {
      if (r == best) continue;
      Vec s = work[r];
      if (s[c] != 0) s = sub_multiple(ring, s, pivot, s[c] / pv, n);
      if (!is_zero(s, n)) next.push_back(s);
    }
    const Vec tail = scale(ring, pivot, ring.pow_p(k - best_v), n);
    if (!is_zero(tail, n)) next.push_back(tail);
    work = std::move(next);
    out.push_back(pivot);
  }

  // Reduce entries above each pivot, left to right.
  for (std::size_t b = 0; b < out.size(); ++b) {
    const std::size_t c = leading(out[b], n);
    const std::uint32_t pv = out[b][c];
    for (std::size_t a = 0; a < b; ++a) {
      const std::uint32_t f = out[a][c] / pv;
      if (f != 0) out[a] = sub_multiple(ring, out[a], out[b], f, n);
    }
  }
  return out;
}

std::size_t howell_length(const Ring& ring, std::size_t n, const std::vector<Vec>& canonical) {
  std::size_t len = 0;
  for (const auto& r : canonical) len += ring.k() - ring.valuation(r[leading(r, n)]);
  return len;
}

std::vector<std::size_t> howell_pivots(std::size_t n, const std::vector<Vec>& canonical) {
  std::vector<std::size_t> p;
  p.reserve(canonical.size());
  for (const auto& r : canonical) p.push_back(leading(r, n));
  return p;
}

std::string howell_label(std::size_t n, const std::vector<Vec>& canonical) {
  std::string s = "[";
  for (std::size_t r = 0; r < canonical.size(); ++r) {
    if (r) s += ";";
    for (std::size_t i = 0; i < n; ++i) {
      if (i) s += ",";
      s += std::to_string(canonical[r][i]);
    }
  }
  return s + "]";
}

}  // namespace netgalois
