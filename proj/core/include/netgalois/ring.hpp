#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace netgalois {

/// A finite commutative chain ring Z/p^k (the prime field F_p when k = 1).
///
/// Every ideal is (p^a) for some 0 <= a <= k, so ideals are identified with
/// their exponent a; a = k is the zero ideal. Elements are representatives in
/// [0, p^k). The modulus is limited to 65535 so products fit in 32 bits.
class Ring {
 public:
  enum class Kind { PrimeField, Chain };

  static Ring prime_field(std::uint32_t p);
  static Ring chain(std::uint32_t p, std::uint32_t k);

  Kind kind() const noexcept { return kind_; }
  std::uint32_t p() const noexcept { return p_; }
  std::uint32_t k() const noexcept { return k_; }
  std::uint32_t modulus() const noexcept { return q_; }
  std::size_t unit_count() const noexcept { return units_.size(); }
  const std::vector<std::uint32_t>& units() const noexcept { return units_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept { return (a + b) % q_; }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept { return (a + q_ - b) % q_; }
  std::uint32_t neg(std::uint32_t a) const noexcept { return (q_ - a) % q_; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept { return (a * b) % q_; }

  bool is_unit(std::uint32_t a) const noexcept { return a % p_ != 0; }
  /// Throws InputError for non-units.
  std::uint32_t inv(std::uint32_t a) const;

  /// Largest a <= k with p^a dividing x; k for x = 0.
  std::uint32_t valuation(std::uint32_t x) const noexcept { return valuation_[x % q_]; }

  /// p^e as a ring element (0 when e >= k).
  std::uint32_t pow_p(std::uint32_t e) const noexcept { return e >= k_ ? 0 : pow_[e]; }

  std::string describe() const;

  friend bool operator==(const Ring& a, const Ring& b) {
    return a.kind_ == b.kind_ && a.p_ == b.p_ && a.k_ == b.k_;
  }

 private:
  Ring(Kind kind, std::uint32_t p, std::uint32_t k);

  Kind kind_;
  std::uint32_t p_, k_, q_;
  std::vector<std::uint32_t> pow_;
  std::vector<std::uint32_t> valuation_;
  std::vector<std::uint32_t> inverse_;
  std::vector<std::uint32_t> units_;
};

bool is_prime(std::uint32_t p) noexcept;

}  // namespace netgalois
