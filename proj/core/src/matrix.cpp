#include "netgalois/matrix.hpp"

#include <limits>
#include <utility>

#include "netgalois/error.hpp"

namespace netgalois {

Matrix identity_matrix(std::size_t n) {
  if (n == 0 || n > kMaxDim) throw InputError("matrix order must be in [1, 4]");
  Matrix m;
  m.n = n;
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix multiply(const Ring& ring, const Matrix& a, const Matrix& b) {
  Matrix c;
  c.n = a.n;
  const std::uint32_t q = ring.modulus();
  for (std::size_t i = 0; i < a.n; ++i) {
    for (std::size_t j = 0; j < a.n; ++j) {
      std::uint64_t s = 0;
      for (std::size_t k = 0; k < a.n; ++k) s += static_cast<std::uint64_t>(a(i, k)) * b(k, j);
      c(i, j) = static_cast<std::uint32_t>(s % q);
    }
  }
  return c;
}

Vec apply(const Ring& ring, const Matrix& g, const Vec& v) {
  Vec w{};
  const std::uint32_t q = ring.modulus();
  for (std::size_t i = 0; i < g.n; ++i) {
    std::uint64_t s = 0;
    for (std::size_t k = 0; k < g.n; ++k) s += static_cast<std::uint64_t>(g(i, k)) * v[k];
    w[i] = static_cast<std::uint32_t>(s % q);
  }
  return w;
}

std::uint32_t determinant(const Ring& ring, const Matrix& m) {
  // Laplace expansion along the first row; n <= 4 keeps this cheap.
  const std::size_t n = m.n;
  if (n == 1) return m(0, 0) % ring.modulus();
  if (n == 2) return ring.sub(ring.mul(m(0, 0), m(1, 1)), ring.mul(m(0, 1), m(1, 0)));
  std::uint32_t det = 0;
  for (std::size_t c = 0; c < n; ++c) {
    Matrix minor;
    minor.n = n - 1;
    for (std::size_t i = 1; i < n; ++i) {
      std::size_t cc = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == c) continue;
        minor(i - 1, cc++) = m(i, j);
      }
    }
    const std::uint32_t term = ring.mul(m(0, c), determinant(ring, minor));
    det = (c % 2 == 0) ? ring.add(det, term) : ring.sub(det, term);
  }
  return det;
}

std::optional<Matrix> inverse(const Ring& ring, const Matrix& m) {
  const std::size_t n = m.n;
  Matrix a = m;
  Matrix inv = identity_matrix(n);
  for (std::size_t c = 0; c < n; ++c) {
    // A local ring: some entry in the column is a unit iff the matrix is
    // invertible, since the residue matrix must be invertible.
    std::size_t pivot = n;
    for (std::size_t r = c; r < n; ++r) {
      if (ring.is_unit(a(r, c))) {
        pivot = r;
        break;
      }
    }
    if (pivot == n) return std::nullopt;
    if (pivot != c) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(c, j), a(pivot, j));
        std::swap(inv(c, j), inv(pivot, j));
      }
    }
    const std::uint32_t s = ring.inv(a(c, c));
    for (std::size_t j = 0; j < n; ++j) {
      a(c, j) = ring.mul(a(c, j), s);
      inv(c, j) = ring.mul(inv(c, j), s);
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a(r, c) == 0) continue;
      const std::uint32_t f = a(r, c);
      for (std::size_t j = 0; j < n; ++j) {
        a(r, j) = ring.sub(a(r, j), ring.mul(f, a(c, j)));
        inv(r, j) = ring.sub(inv(r, j), ring.mul(f, inv(c, j)));
      }
    }
  }
  return inv;
}

std::string to_string(const Matrix& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.n; ++i) {
    if (i) s += ",";
    s += "[";
    for (std::size_t j = 0; j < m.n; ++j) {
      if (j) s += ",";
      s += std::to_string(m(i, j));
    }
    s += "]";
  }
  return s + "]";
}

MatrixCodec::MatrixCodec(std::uint32_t q, std::size_t n) : q_(q), n_(n) {
  if (n == 0 || n > kMaxDim) throw InputError("matrix order must be in [1, 4]");
  constexpr std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() >> 1;
  for (std::size_t i = 0; i < n * n; ++i) {
    if (space_ > limit / q) throw InputError("q^(n*n) does not fit in 63 bits");
    space_ *= q;
  }
  for (std::size_t i = 0; i < n; ++i) vec_space_ *= q;
  if (vec_space_ > std::numeric_limits<std::uint32_t>::max()) {
    throw InputError("q^n does not fit in 32 bits");
  }
}

std::uint64_t MatrixCodec::encode(const Matrix& m) const noexcept {
  std::uint64_t c = 0;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) c = c * q_ + m(i, j);
  return c;
}

Matrix MatrixCodec::decode(std::uint64_t code) const noexcept {
  Matrix m;
  m.n = n_;
  for (std::size_t t = n_ * n_; t-- > 0;) {
    m(t / n_, t % n_) = static_cast<std::uint32_t>(code % q_);
    code /= q_;
  }
  return m;
}

std::uint32_t MatrixCodec::encode_vec(const Vec& v) const noexcept {
  std::uint32_t c = 0;
  for (std::size_t i = 0; i < n_; ++i) c = c * q_ + v[i];
  return c;
}

Vec MatrixCodec::decode_vec(std::uint32_t code) const noexcept {
  Vec v{};
  for (std::size_t i = n_; i-- > 0;) {
    v[i] = code % q_;
    code /= q_;
  }
  return v;
}

}  // namespace netgalois
