#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "netgalois/matrix.hpp"
#include "netgalois/ring.hpp"

namespace netgalois {

/// Canonical generating rows of the submodule of R^n spanned by `rows`,
/// R = Z/p^k.
///
/// Output rows have strictly increasing pivot columns. The pivot of a row is
/// p^v for some v < k, entries above a pivot are reduced modulo that pivot,
/// and the rows whose leading columns are zero generate exactly the
/// submodule elements with those leading coordinates zero. Two generating
/// sets span the same submodule iff their canonical rows coincide.
std::vector<Vec> howell_form(const Ring& ring, std::size_t n, std::vector<Vec> rows);

/// Composition length of the span of canonical rows: sum of (k - v) over
/// pivots p^v.
std::size_t howell_length(const Ring& ring, std::size_t n, const std::vector<Vec>& canonical);

/// Pivot column of each canonical row.
std::vector<std::size_t> howell_pivots(std::size_t n, const std::vector<Vec>& canonical);

/// "[1,0;0,7]"; the zero module is "[]".
std::string howell_label(std::size_t n, const std::vector<Vec>& canonical);

}  // namespace netgalois
