#include <gtest/gtest.h>

#include "../oracle.hpp"
#include "netgalois/error.hpp"
#include "netgalois/howell.hpp"
#include "netgalois/matrix.hpp"
#include "netgalois/ring.hpp"

using namespace netgalois;

TEST(Ring, PrimeFieldInverses) {
  const Ring r = Ring::prime_field(7);
  EXPECT_EQ(r.unit_count(), 6u);
  for (std::uint32_t a = 1; a < 7; ++a) EXPECT_EQ(r.mul(a, r.inv(a)), 1u);
  EXPECT_THROW(r.inv(0), InputError);
}

TEST(Ring, ChainValuationsAndUnits) {
  const Ring r = Ring::chain(7, 2);
  EXPECT_EQ(r.modulus(), 49u);
  EXPECT_EQ(r.unit_count(), 42u);
  EXPECT_EQ(r.valuation(0), 2u);
  EXPECT_EQ(r.valuation(14), 1u);
  EXPECT_EQ(r.valuation(3), 0u);
  EXPECT_EQ(r.pow_p(1), 7u);
  EXPECT_EQ(r.pow_p(2), 0u);
  EXPECT_THROW(r.inv(7), InputError);
  for (auto u : r.units()) EXPECT_EQ(r.mul(u, r.inv(u)), 1u);
}

TEST(Ring, RejectsBadParameters) {
  EXPECT_THROW(Ring::prime_field(6), InputError);
  EXPECT_THROW(Ring::chain(4, 2), InputError);
}

TEST(Matrix, DeterminantAgreesWithBijectivity) {
  for (const Ring& r : {Ring::chain(2, 2), Ring::prime_field(3), Ring::chain(3, 2)}) {
    const oracle::Space s{r.modulus(), 2};
    oracle::for_each_matrix(s, [&](const std::vector<std::uint32_t>& e) {
      Matrix m = identity_matrix(2);
      for (std::size_t i = 0; i < 4; ++i) m(i / 2, i % 2) = e[i];
      ASSERT_EQ(is_invertible(r, m), oracle::bijective(s, e)) << to_string(m);
      if (auto inv = inverse(r, m)) EXPECT_EQ(multiply(r, m, *inv), identity_matrix(2));
    });
  }
}

TEST(Matrix, CodecRoundTrip) {
  const MatrixCodec c(49, 3);
  Matrix m = identity_matrix(3);
  m(0, 2) = 48;
  m(2, 1) = 7;
  EXPECT_EQ(c.decode(c.encode(m)), m);
  const Vec v{3, 0, 48, 0};
  EXPECT_EQ(c.decode_vec(c.encode_vec(v)), v);
}

TEST(Howell, CanonicalFormIgnoresGeneratorChoice) {
  const Ring r = Ring::chain(2, 2);
  // 2(1,2) = (2,0), so the first span is cyclic
  const auto a = howell_form(r, 2, {Vec{2, 0}, Vec{1, 2}});
  const auto c = howell_form(r, 2, {Vec{3, 2}});
  const auto b = howell_form(r, 2, {Vec{3, 2}, Vec{1, 0}});
  EXPECT_EQ(howell_label(2, a), howell_label(2, c));
  EXPECT_NE(howell_label(2, a), howell_label(2, b));
  EXPECT_EQ(howell_length(r, 2, a), 2u);
  EXPECT_EQ(howell_length(r, 2, b), 3u);
  EXPECT_EQ(howell_length(r, 2, howell_form(r, 2, {Vec{1, 0}, Vec{0, 1}})), 4u);
}
