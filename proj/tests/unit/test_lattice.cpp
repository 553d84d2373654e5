#include <gtest/gtest.h>

#include <nlohmann/json.hpp>
#include <random>

#include "../oracle.hpp"
#include "netgalois/error.hpp"
#include "netgalois/lattice.hpp"
#include "netgalois/submodule_lattice.hpp"

using namespace netgalois;

namespace {

oracle::Module as_oracle(const SubmoduleLattice& sl, const oracle::Space& s, Elem x) {
  oracle::Module m(s.count(), 0);
  sl.vectors(x).for_each([&](std::size_t code) {
    const Vec v = sl.codec().decode_vec(static_cast<std::uint32_t>(code));
    m[s.encode(std::vector<std::uint32_t>(v.begin(), v.begin() + s.n))] = 1;
  });
  return m;
}

}  // namespace

TEST(Lattice, PentagonIsNotModular) {
  const FiniteLattice n5 = pentagon_lattice();
  EXPECT_EQ(n5.size(), 5u);
  const auto v = modularity_violation(n5);
  ASSERT_TRUE(v.has_value());
  EXPECT_TRUE(modularity_witness_fails(n5, *v));
  EXPECT_FALSE(lattice_law_violation(n5).has_value());
}

TEST(Lattice, JsonRoundTrip) {
  const FiniteLattice n5 = pentagon_lattice();
  const FiniteLattice back = lattice_from_json(lattice_to_json(n5));
  EXPECT_EQ(back.labels(), n5.labels());
  EXPECT_EQ(back.meet_table(), n5.meet_table());
  EXPECT_EQ(back.join_table(), n5.join_table());
}

TEST(Lattice, DotMentionsEveryElement) {
  const FiniteLattice n5 = pentagon_lattice();
  const std::string dot = lattice_to_dot(n5);
  for (const auto& l : n5.labels()) EXPECT_NE(dot.find(l), std::string::npos) << l;
}

TEST(Lattice, SublatticeCountMatchesSubsetScan) {
  const FiniteLattice n5 = pentagon_lattice();
  std::vector<Elem> all;
  for (Elem x = 0; x < n5.size(); ++x) all.push_back(x);
  EXPECT_EQ(enumerate_sublattices(n5).size(), oracle::count_sublattices(n5, all));
}

struct Instance {
  std::uint32_t p, k;
  std::size_t n, expected;
};

class SubmoduleOracle : public ::testing::TestWithParam<Instance> {};

// Element sets, meets and joins agree with sets of vectors, on every instance
// with at most 10^4 vectors that stays quick.
TEST_P(SubmoduleOracle, MatchesVectorSets) {
  const auto [p, k, n, expected] = GetParam();
  const Ring r = k == 1 ? Ring::prime_field(p) : Ring::chain(p, k);
  const auto sl = SubmoduleLattice::build(r, n);
  const oracle::Space s{r.modulus(), n};
  const auto brute = oracle::all_submodules(s);
  const FiniteLattice& l = sl->lattice();
  ASSERT_EQ(l.size(), brute.size());
  EXPECT_EQ(l.size(), expected);
  std::vector<oracle::Module> mods;
  for (Elem x = 0; x < l.size(); ++x) {
    mods.push_back(as_oracle(*sl, s, x));
    EXPECT_TRUE(brute.count(mods.back())) << l.label(x);
  }
  for (Elem x = 0; x < l.size(); ++x)
    for (Elem y = 0; y < l.size(); ++y) {
      oracle::Module inter(s.count(), 0);
      for (std::size_t v = 0; v < s.count(); ++v) inter[v] = mods[x][v] && mods[y][v];
      ASSERT_EQ(mods[l.meet(x, y)], inter) << l.label(x) << " ^ " << l.label(y);
      ASSERT_EQ(mods[l.join(x, y)], oracle::sum(s, mods[x], mods[y])) << l.label(x) << " v " << l.label(y);
    }
  EXPECT_TRUE(is_modular(l));
}

INSTANTIATE_TEST_SUITE_P(Small, SubmoduleOracle,
                         ::testing::Values(Instance{2, 1, 2, 5}, Instance{7, 1, 2, 10}, Instance{2, 2, 2, 15},
                                           Instance{3, 2, 2, 23}, Instance{2, 1, 3, 16}, Instance{2, 2, 3, 129}));

TEST(SubmoduleLattice, DimensionIsCompositionLength) {
  const auto sl = SubmoduleLattice::build(Ring::chain(7, 2), 2);
  const FiniteLattice& l = sl->lattice();
  EXPECT_EQ(l.size(), 75u);
  EXPECT_EQ(l.dimension(l.top()), 4u);
  for (Elem x = 0; x < l.size(); ++x) EXPECT_EQ(l.dimension(x), sl->length(x));
}

TEST(SubmoduleLattice, ImageAgreesWithElementwiseImage) {
  const Ring r = Ring::prime_field(7);
  const auto sl = SubmoduleLattice::build(r, 2);
  const oracle::Space s{7, 2};
  std::mt19937_64 rng(3);
  for (int t = 0; t < 200; ++t) {
    Matrix g = identity_matrix(2);
    do {
      for (std::size_t i = 0; i < 4; ++i) g(i / 2, i % 2) = rng() % 7;
    } while (!is_invertible(r, g));
    for (Elem x = 0; x < sl->size(); ++x) {
      oracle::Module img(s.count(), 0);
      sl->vectors(x).for_each([&](std::size_t code) {
        const Vec v = apply(r, g, sl->codec().decode_vec(static_cast<std::uint32_t>(code)));
        img[s.encode({v[0], v[1]})] = 1;
      });
      ASSERT_EQ(as_oracle(*sl, s, sl->image(g, x)), img);
    }
  }
}

TEST(SubmoduleLattice, CapIsEnforced) {
  EXPECT_THROW(SubmoduleLattice::build(Ring::prime_field(7), 2, 5), CapExceeded);
}
