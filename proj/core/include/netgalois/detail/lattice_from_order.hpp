#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "netgalois/error.hpp"

namespace netgalois {

template <class Leq>
FiniteLattice lattice_from_order(std::vector<std::string> labels, Leq&& leq) {
  const std::size_t n = labels.size();
  if (n == 0) throw InputError("lattice_from_order: empty element set");

  // Greatest element among those satisfying pred, if it dominates all of them.
  auto extreme = [&](auto&& pred, bool greatest) -> std::optional<Elem> {
    for (Elem c = 0; c < n; ++c) {
      if (!pred(c)) continue;
      bool ok = true;
      for (Elem d = 0; d < n && ok; ++d) {
        if (pred(d)) ok = greatest ? leq(d, c) : leq(c, d);
      }
      if (ok) return c;
    }
    return std::nullopt;
  };

  std::vector<Elem> meet(n * n), join(n * n);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      auto m = extreme([&](Elem c) { return leq(c, a) && leq(c, b); }, true);
      auto j = extreme([&](Elem c) { return leq(a, c) && leq(b, c); }, false);
      if (!m || !j) throw InputError("lattice_from_order: order is not a lattice");
      meet[a * n + b] = *m;
      join[a * n + b] = *j;
    }
  }
  auto bottom = extreme([](Elem) { return true; }, false);
  auto top = extreme([](Elem) { return true; }, true);
  return FiniteLattice(std::move(labels), std::move(meet), std::move(join), *bottom, *top);
}

}  // namespace netgalois
