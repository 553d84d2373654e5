#include <gtest/gtest.h>

#include "../oracle.hpp"
#include "netgalois/axioms.hpp"
#include "netgalois/glnr.hpp"
#include "netgalois/nets.hpp"
#include "netgalois/report.hpp"

using namespace netgalois;

namespace {

std::shared_ptr<const GaloisContext> f7() {
  static const auto ctx = GaloisContext::build(Ring::prime_field(7), 2);
  return ctx;
}

std::shared_ptr<const GaloisContext> z4() {
  static const auto ctx = GaloisContext::build(Ring::chain(2, 2), 2);
  return ctx;
}

}  // namespace

TEST(Frame, SupportMatchesMinimalTuple) {
  for (const auto& ctx : {f7(), z4(), GaloisContext::build(Ring::chain(2, 2), 3)}) {
    const Frame& f = ctx->frame();
    for (Elem x = 0; x < ctx->lattice().size(); ++x)
      ASSERT_EQ(f.support(x).parts, oracle::minimal_support(ctx->lattice(), f.atoms(), x)) << ctx->lattice().label(x);
  }
}

TEST(Frame, BooleanPartAndM) {
  EXPECT_EQ(f7()->frame().m(), 1u);
  EXPECT_EQ(z4()->frame().m(), 2u);
  EXPECT_EQ(f7()->L0().size(), 4u);
  EXPECT_EQ(f7()->frame().lbar0().size(), 4u);
  EXPECT_EQ(z4()->frame().lbar0().size(), 9u);
  EXPECT_EQ(z4()->L0prime().size(), 13u);
}

TEST(Frame, ComplementOverClearsChosenCoordinates) {
  for (const auto& ctx : {z4(), GaloisContext::build(Ring::chain(2, 2), 3)}) {
    const Frame& f = ctx->frame();
    const FiniteLattice& l = ctx->lattice();
    for (std::size_t i = 0; i < ctx->n(); ++i) {
      const std::size_t idx[] = {i};
      for (Elem v = 0; v < l.size(); ++v) {
        const Elem c = f.complement_over(v, idx);
        EXPECT_EQ(f.support_part(c, i), l.bottom()) << l.label(v);
        EXPECT_EQ(l.join(c, f.support_part(v, i)), l.join(v, f.support_part(v, i))) << l.label(v);
      }
    }
  }
}

TEST(Galois, ElementaryTransvectionsAreMembers) {
  const auto ctx = f7();
  const Matrix t = elementary_transvection(*ctx, 0, 1, 1);
  const GIndex g = ctx->group().index_of(t);
  EXPECT_TRUE(ctx->is_transvection(g, 0, 1, ctx->frame().atom(1)));
  EXPECT_EQ(elementary_transvection(*ctx, 0, 1, 0), identity_matrix(2));

  const auto z49 = GaloisContext::build(Ring::chain(7, 2), 2);
  const Matrix s = elementary_transvection(*z49, 1, 0, 7);
  const Elem seven_e0 = z49->modules().cyclic(z49->modules().codec().encode_vec(Vec{7, 0}));
  EXPECT_TRUE(z49->is_transvection(z49->group().index_of(s), 1, 0, seven_e0));
}

TEST(Galois, TransvectionSetsAreInverseClosed) {
  const auto ctx = z4();
  const Ambient& g = ctx->group();
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      if (i == j) continue;
      for (Elem x : ctx->frame().below_atom(j)) {
        const auto& ms = ctx->transvection_members(i, j, x, TransvectionMode::Full);
        EXPECT_FALSE(ms.empty());
        for (GIndex t : ms) EXPECT_TRUE(ctx->is_transvection(g.inv(t), i, j, x));
      }
    }
}

TEST(Galois, ClosureIdentities) {
  const auto ctx = f7();
  for (const auto& m : enumerate_sublattices(ctx->L0prime())) {
    const Subgroup phi = ctx->galois_phi(m);
    EXPECT_EQ(ctx->galois_phi(ctx->galois_psi(phi)), phi);
    EXPECT_TRUE(m.is_subset_of(ctx->galois_psi(phi)));
  }
  const Subgroup h = ctx->H();
  EXPECT_EQ(ctx->galois_psi(ctx->galois_phi(ctx->galois_psi(h))), ctx->galois_psi(h));
}

TEST(Nets, F7HasFourNetsWithExpectedOrders) {
  const NetCatalog catalog(f7());
  ASSERT_EQ(catalog.nets().size(), 4u);
  std::multiset<std::size_t> orders;
  for (const auto& e : catalog.nets()) {
    orders.insert(e.group.order());
    EXPECT_EQ(sigma_of(*f7(), e.group), e.tau);
    EXPECT_EQ(transvection_closure(*f7(), e.tau), e.group);
  }
  EXPECT_EQ(orders, (std::multiset<std::size_t>{36, 252, 252, 2016}));
  EXPECT_EQ(catalog.sublattices().size(), 12u);
  EXPECT_EQ(catalog.classes().size(), 4u);
}

TEST(Nets, SigmaOfDiagonalAndWhole) {
  const auto ctx = f7();
  const NetCollection zero = sigma_of(*ctx, ctx->H());
  const NetCollection full = sigma_of(*ctx, ctx->G());
  const FiniteLattice& l = ctx->lattice();
  EXPECT_EQ(zero(0, 1), l.bottom());
  EXPECT_EQ(full(0, 1), ctx->frame().atom(1));
  EXPECT_EQ(zero(0, 0), ctx->frame().atom(0));
}

TEST(DNet, CandidatesAndLaw) {
  EXPECT_EQ(enumerate_dnet_candidates(2, 1).size(), 4u);
  EXPECT_EQ(enumerate_dnet_candidates(2, 2).size(), 9u);
  const auto c3 = enumerate_dnet_candidates(3, 1);
  EXPECT_EQ(c3.size(), 64u);
  for (const auto& s : c3) EXPECT_EQ(is_dnet(s), oracle::product_law(3, 1, s.exp));
  const DNet broken = broken_product_fixture(1);
  EXPECT_FALSE(is_dnet(broken));
  EXPECT_TRUE(dnet_law_violation(broken).has_value());
}

TEST(DNet, NetSubgroupOrdersMatchBruteForce) {
  for (const auto& ctx : {f7(), z4()}) {
    const std::uint32_t p = ctx->ring().p(), k = ctx->ring().k();
    for (const auto& s : enumerate_dnet_candidates(2, k))
      EXPECT_EQ(net_subgroup(ctx->group(), s).order(),
                oracle::net_group_order({ctx->ring().modulus(), 2}, p, k, s.exp));
  }
}

TEST(DNet, BridgeRoundTrip) {
  for (const auto& ctx : {f7(), GaloisContext::build(Ring::chain(7, 2), 2)}) {
    const NetCatalog catalog(ctx, false);
    for (const auto& e : catalog.nets()) {
      const DNet s = bridge(*ctx, e.tau);
      EXPECT_TRUE(is_dnet(s));
      EXPECT_EQ(bridge_back(*ctx, s), e.tau);
      EXPECT_EQ(net_subgroup(ctx->group(), s), e.group);
    }
  }
}

TEST(DNet, SandwichOnUpperTriangular) {
  const auto ctx = f7();
  const NetCatalog catalog(ctx);
  const DNetCatalog dnets(catalog);
  EXPECT_TRUE(dnets.bridge_consistent());
  EXPECT_EQ(dnets.valid_count(), 4u);
  Matrix u = identity_matrix(2);
  u(0, 1) = 1;
  const GIndex gen[] = {ctx->group().index_of(u)};
  const Subgroup b = extend_subgroup(ctx->group(), ctx->H(), gen);
  const auto v = verify_sandwich(dnets, b);
  EXPECT_EQ(v.net_order, 252u);
  EXPECT_EQ(v.f_order, 252u);
  EXPECT_EQ(v.normalizer_order, 252u);
  EXPECT_TRUE(all_asserted_hold(v.checks));
}

TEST(Axioms, F7ExhaustiveAllHold) {
  AxiomOptions o;
  o.pool = PoolMode::Exhaustive;
  const auto recs = check_conditions(*f7(), all_condition_ids(*f7()), o);
  for (const auto& r : recs)
    if (r.asserted) EXPECT_TRUE(r.holds) << r.id;
}

TEST(Axioms, SelectionParsing) {
  const auto ids = parse_condition_selection("7-10,12", *f7());
  EXPECT_EQ(ids, (std::vector<std::string>{"c7", "c8", "c9", "c10", "c12"}));
  EXPECT_EQ(parse_condition_selection("m1-m4", *f7()).size(), 4u);
  EXPECT_THROW(parse_condition_selection("m1", *z4()), InputError);
  EXPECT_THROW(parse_condition_selection("13", *f7()), InputError);
}

TEST(Axioms, FailingWitnessReplays) {
  // On Z/4 the support condition fails; its witness must replay.
  const auto recs = check_conditions(*z4(), {"c12"});
  ASSERT_EQ(recs.size(), 1u);
  ASSERT_FALSE(recs[0].holds);
  const auto r = replay_condition(*z4(), "c12", recs[0].witness);
  EXPECT_TRUE(r.reproduced) << r.detail;
}
