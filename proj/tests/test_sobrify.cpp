#include <gtest/gtest.h>

#include "adlab/sobrify.hpp"
#include "adlab/theorems.hpp"
#include "oracles.hpp"

using namespace adlab;

namespace {

Space term() { return Space(Topology::make(1, {0, 1}), Preorder::discrete(1)); }
Topology sierpinski() { return Topology::make(2, {0, 0b10, 0b11}); }

}  // namespace

TEST(StandardSobrification, Examples) {
  const Sobrification s = standard_sobrification(sierpinski());
  EXPECT_EQ(s.points.size(), 2U);
  EXPECT_TRUE(find_homeomorphism(s.space, sierpinski()).has_value());
  EXPECT_EQ(standard_sobrification(Topology::indiscrete(2)).space.size(), 1);
  EXPECT_EQ(standard_sobrification(Topology::make(0, {0})).space.size(), 0);
}

TEST(IrreduciblePairs, DiscretePreorderGivesPointClosures) {
  for (const auto& t : enumerate_topologies(3)) {
    const Space x(t, Preorder::discrete(3));
    for (Variant v : kAllVariants) {
      std::vector<IrreduciblePair> want;
      for (int p = 0; p < 3; ++p) want.push_back({t.closure(bits::single(p)), p});
      auto got = irreducible_pairs(x, v);
      auto key = [](const IrreduciblePair& a, const IrreduciblePair& b) {
        return std::pair(a.closed, a.rep) < std::pair(b.closed, b.rep);
      };
      std::sort(want.begin(), want.end(), key);
      std::sort(got.begin(), got.end(), key);
      EXPECT_EQ(got, want);
    }
  }
}

TEST(IrreduciblePairs, IndiscretePreorderIsVacuous) {
  for (const auto& t : enumerate_topologies(3)) {
    const Space x(t, Preorder::indiscrete(3));
    for (Variant v : kAllVariants) {
      EXPECT_EQ(irreducible_pairs(x, v).size(), irreducible_closed_sets(t).size());
    }
  }
}

TEST(IrreduciblePairs, SpecializationOrderDownVariant) {
  for (const auto& t : enumerate_topologies(3)) {
    const Space x(t, specialization_preorder(t));
    for (const auto& pr : irreducible_pairs(x, Variant::Down)) {
      EXPECT_EQ(pr.closed, x.order().downclose(x.order().equivalence_class(pr.rep)));
    }
  }
}

TEST(IrreduciblePairs, MatchOracle) {
  for (int n = 0; n <= 3; ++n) {
    for (const auto& x : enumerate_spaces(n)) {
      for (Variant v : kAllVariants) {
        std::vector<std::pair<Subset, int>> got;
        for (const auto& pr : irreducible_pairs(x, v)) got.emplace_back(pr.closed, pr.rep);
        std::sort(got.begin(), got.end());
        auto want = oracle::ads_points(x, v);
        std::sort(want.begin(), want.end());
        EXPECT_EQ(got, want) << describe_space(x) << " " << to_string(v);
      }
    }
  }
}

TEST(AdsSpace, FunctorComparisons) {
  EXPECT_TRUE(find_pretop_iso(ads_space(term(), Variant::Both).space, term()).has_value());
  for (const auto& t : enumerate_topologies(3)) {
    for (Variant v : kAllVariants) {
      const AdSobrification d = ads_space(discr(t), v);
      EXPECT_TRUE(find_pretop_iso(d.space, discr(t)).has_value());
      EXPECT_TRUE(find_homeomorphism(underlying(d.space), t).has_value());
      const AdSobrification i = ads_space(ind_space(t), v);
      EXPECT_TRUE(find_pretop_iso(i.space, ind_space(standard_sobrification(t).space)).has_value());
    }
  }
}

TEST(AdsHom, Examples) {
  const Space x(sierpinski(), Preorder::discrete(2));
  const AdSobrification xs = ads_space(x, Variant::Both);
  EXPECT_EQ(ads_hom(identity_map(2), xs, x, xs), identity_map(xs.space.size()));
  // Constant map to point 1: every pair goes to (cl{1}, [1]).
  const PointMap c{1, 1};
  const PointMap h = ads_hom(c, xs, x, xs);
  for (int i : h) {
    EXPECT_EQ(xs.pairs[i].closed, sierpinski().closure(0b10));
    EXPECT_EQ(xs.pairs[i].rep, 1);
  }
  const AdSobrification ts = ads_space(term(), Variant::Both);
  EXPECT_EQ(ads_hom({0, 0}, xs, term(), ts), (PointMap{0, 0}));
}

TEST(AdsAdptIso, ExplicitWitness) {
  const Space chain(sierpinski(), Preorder::from_pairs(2, std::vector<OrderPair>{{0, 1}}));
  const IsoCheck c = ads_adpt_iso(chain, Variant::Both);
  EXPECT_TRUE(c.ok) << c.witness;
  EXPECT_EQ(ads_space(chain, Variant::Both).space.size(),
            adpt_space(build_adO(chain, Variant::Both)).space.size());
  for (int n = 0; n <= 3; ++n) {
    for (const auto& x : enumerate_spaces(n)) {
      for (Variant v : kAllVariants) {
        const IsoCheck r = ads_adpt_iso(x, v);
        EXPECT_TRUE(r.ok) << describe_space(x) << ": " << r.witness;
        const IsoCheck d = check_diamond_bracket(x, ads_space(x, v));
        EXPECT_TRUE(d.ok) << d.witness;
      }
    }
  }
}
