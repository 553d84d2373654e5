#include "netgalois/ring.hpp"

#include "netgalois/error.hpp"

namespace netgalois {

bool is_prime(std::uint32_t p) noexcept {
  if (p < 2) return false;
  for (std::uint32_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

Ring Ring::prime_field(std::uint32_t p) { return Ring(Kind::PrimeField, p, 1); }

Ring Ring::chain(std::uint32_t p, std::uint32_t k) { return Ring(Kind::Chain, p, k); }

Ring::Ring(Kind kind, std::uint32_t p, std::uint32_t k) : kind_(kind), p_(p), k_(k), q_(1) {
  if (!is_prime(p)) throw InputError("ring characteristic base " + std::to_string(p) + " is not prime");
  if (k == 0) throw InputError("ring exponent k must be at least 1");
  if (kind == Kind::PrimeField && k != 1) throw InputError("prime field must have k = 1");
  for (std::uint32_t e = 0; e < k; ++e) {
    pow_.push_back(q_);
    if (static_cast<std::uint64_t>(q_) * p > 65535) {
      throw InputError("ring modulus p^k exceeds 65535");
    }
    q_ *= p;
  }
  valuation_.assign(q_, 0);
  inverse_.assign(q_, 0);
  valuation_[0] = k_;
  for (std::uint32_t x = 1; x < q_; ++x) {
    std::uint32_t v = 0, y = x;
    while (y % p_ == 0) {
      y /= p_;
      ++v;
    }
    valuation_[x] = v;
    if (v == 0) units_.push_back(x);
  }
  for (std::uint32_t u : units_) {
    for (std::uint32_t w : units_) {
      if ((u * w) % q_ == 1) {
        inverse_[u] = w;
        break;
      }
    }
  }
}

std::uint32_t Ring::inv(std::uint32_t a) const {
  if (!is_unit(a)) throw InputError("inverse of a non-unit");
  return inverse_[a % q_];
}

std::string Ring::describe() const {
  if (k_ == 1) return "F_" + std::to_string(p_);
  return "Z/" + std::to_string(q_);
}

}  // namespace netgalois
