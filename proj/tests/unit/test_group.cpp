#include <gtest/gtest.h>

#include <random>

#include "../oracle.hpp"
#include "netgalois/error.hpp"
#include "netgalois/galois.hpp"

using namespace netgalois;

TEST(Group, OrderFormulaMatchesInvertibilityFilter) {
  for (const Ring& r : {Ring::chain(2, 2), Ring::prime_field(7), Ring::prime_field(2), Ring::chain(3, 2)}) {
    const auto g = Ambient::general_linear(SubmoduleLattice::build(r, 2));
    const auto brute = oracle::count_groups({r.modulus(), 2});
    EXPECT_EQ(g->size(), brute.gl) << r.describe();
    EXPECT_EQ(Ambient::general_linear_order(r, 2), brute.gl) << r.describe();
  }
  EXPECT_EQ(Ambient::general_linear_order(Ring::chain(7, 2), 2), 2016u * 2401u);
  EXPECT_EQ(Ambient::general_linear_order(Ring::chain(2, 2), 3), 86016u);
}

TEST(Group, ActionIsCompatibleWithProducts) {
  const auto ctx = GaloisContext::build(Ring::chain(2, 2), 2);
  const Ambient& g = ctx->group();
  std::mt19937_64 rng(7);
  for (int t = 0; t < 10000; ++t) {
    const auto a = static_cast<GIndex>(rng() % g.size());
    const auto b = static_cast<GIndex>(rng() % g.size());
    const auto x = static_cast<Elem>(rng() % ctx->lattice().size());
    ASSERT_EQ(g.act(g.mul(a, b), x), g.act(a, g.act(b, x)));
  }
}

TEST(Group, MultiplicationAndInverse) {
  const auto ctx = GaloisContext::build(Ring::prime_field(7), 2);
  const Ambient& g = ctx->group();
  const Ring& r = ctx->ring();
  for (GIndex a = 0; a < g.size(); a += 37)
    for (GIndex b = 0; b < g.size(); b += 53) {
      ASSERT_EQ(g.matrix(g.mul(a, b)), multiply(r, g.matrix(a), g.matrix(b)));
      ASSERT_EQ(g.mul(a, g.inv(a)), g.identity());
    }
}

TEST(Group, DiagonalSubgroupIsCoordinateFixer) {
  const auto ctx = GaloisContext::build(Ring::prime_field(7), 2);
  EXPECT_EQ(ctx->H().order(), 36u);
  const auto& atoms = ctx->frame().atoms();
  EXPECT_EQ(fixer(ctx->group(), atoms), ctx->H());
  EXPECT_TRUE(is_normal_in(ctx->group(), ctx->H(), ctx->H()));
  EXPECT_FALSE(is_normal_in(ctx->group(), ctx->H(), ctx->G()));
}

TEST(Group, ClosureOfUpperTriangularGenerator) {
  const auto ctx = GaloisContext::build(Ring::prime_field(7), 2);
  Matrix u = identity_matrix(2);
  u(0, 1) = 1;
  const GIndex gen[] = {ctx->group().index_of(u)};
  const Subgroup b = extend_subgroup(ctx->group(), ctx->H(), gen);
  EXPECT_EQ(b.order(), 252u);
  EXPECT_TRUE(is_subgroup_of(ctx->H(), b));
  EXPECT_EQ(normalizer(ctx->group(), b, ctx->G()).order(), 252u);
}

TEST(Group, ClosureCapThrows) {
  const auto ctx = GaloisContext::build(Ring::prime_field(7), 2);
  Matrix u = identity_matrix(2);
  u(0, 1) = 1;
  Matrix l = identity_matrix(2);
  l(1, 0) = 1;
  const GIndex gens[] = {ctx->group().index_of(u), ctx->group().index_of(l)};
  EXPECT_THROW(close_subgroup(ctx->group(), gens, 100), CapExceeded);
}

TEST(Group, GroupCapThrows) {
  EXPECT_THROW(GaloisContext::build(Ring::prime_field(7), 3, 1'000'000), CapExceeded);
}
