#include <gtest/gtest.h>

#include <random>

#include "adlab/error.hpp"
#include "adlab/theorems.hpp"
#include "oracles.hpp"

using namespace adlab;

namespace {

Topology sierpinski() { return Topology::make(2, {0, 0b10, 0b11}); }

Instance instance(const Space& x, Variant v) { return {x, v, describe_space(x)}; }

// Preorders on n points that make every map monotone into its target.
bool all_monotone(const Preorder& p, const std::vector<std::pair<PointMap, Space>>& targets) {
  for (const auto& [g, y] : targets) {
    if (!is_monotone(g, p, y.order())) return false;
  }
  return true;
}

}  // namespace

TEST(Registry, IdsAndLookup) {
  const auto& reg = theorem_registry();
  EXPECT_EQ(reg.size(), 19U);
  EXPECT_TRUE(find_theorem("CEX-ADS").expected_fail);
  EXPECT_TRUE(find_theorem("CEX-LIFT").expected_fail);
  EXPECT_FALSE(find_theorem("IDEMPOTENT").expected_fail);
  try {
    find_theorem("NOPE");
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnknownTheorem);
  }
}

TEST(Registry, DesignatedCounterexamples) {
  const Space x(Topology::indiscrete(2), Preorder::discrete(2));
  const CheckReport a = run_check("CEX-ADS", instance(x, Variant::Both));
  EXPECT_EQ(a.verdict, Verdict::ExpectedFail);
  EXPECT_NE(a.witness.find("2 points"), std::string::npos) << a.witness;
  EXPECT_NE(a.witness.find("has 1"), std::string::npos) << a.witness;
  const CheckReport b = run_check("CEX-LIFT", instance(x, Variant::Both));
  EXPECT_EQ(b.verdict, Verdict::ExpectedFail);
  EXPECT_FALSE(b.witness.empty());
}

TEST(Registry, LiftSquareOnSierpinski) {
  const Space x(sierpinski(), Preorder::discrete(2));
  EXPECT_EQ(run_check("LIFT-SQUARE", instance(x, Variant::Both)).verdict, Verdict::Pass);
  const Space empty(Topology::make(0, {0}), Preorder::discrete(0));
  EXPECT_EQ(run_check("LIFT-SQUARE", instance(empty, Variant::Both)).verdict, Verdict::Skip);
}

TEST(Sweep, IdempotentAtTwoPoints) {
  SweepOptions opt;
  opt.n = 2;
  const SweepSummary s = sweep("IDEMPOTENT", opt);
  EXPECT_EQ(s.reports.size(), 48U);
  EXPECT_EQ(s.pass, 48);
  opt.variant = Variant::Up;
  EXPECT_EQ(sweep("IDEMPOTENT", opt).reports.size(), 16U);
}

TEST(Sweep, EveryIdHoldsUpToTwoPoints) {
  for (const auto& t : theorem_registry()) {
    for (int n = 0; n <= 2; ++n) {
      SweepOptions opt;
      opt.n = n;
      const SweepSummary s = sweep(t.id, opt);
      EXPECT_EQ(s.fail, 0) << t.id << " n=" << n;
      if (!t.expected_fail) EXPECT_EQ(s.expected_fail, 0) << t.id;
    }
  }
}

TEST(Sweep, ReportsInCanonicalOrderAndDeterministic) {
  SweepOptions opt;
  opt.n = 2;
  opt.workers = 4;
  const SweepSummary a = sweep("ADS-ISO", opt);
  opt.workers = 1;
  const SweepSummary b = sweep("ADS-ISO", opt);
  ASSERT_EQ(a.reports.size(), b.reports.size());
  const auto insts = sweep_instances(opt);
  for (std::size_t i = 0; i < a.reports.size(); ++i) {
    EXPECT_EQ(a.reports[i].instance, b.reports[i].instance);
    EXPECT_EQ(a.reports[i].instance, insts[i].description);
    EXPECT_EQ(a.reports[i].verdict, b.reports[i].verdict);
  }
}

TEST(Generated, FrameChecks) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    for (Variant v : kAllVariants) {
      for (FrameFamily fam : {FrameFamily::AdO, FrameFamily::Ind}) {
        const GeneratedFrame g = random_adframe(fam, v, seed);
        EXPECT_EQ(check_frame("IDEMPOTENT", g).verdict, Verdict::Pass) << g.description;
        EXPECT_EQ(check_frame("ADO-VALID", g).verdict, Verdict::Pass) << g.description;
      }
    }
  }
}

TEST(Isomorphisms, Search) {
  const Space s(sierpinski(), Preorder::discrete(2));
  EXPECT_EQ(find_pretop_iso(s, s), identity_map(2));
  const Space swapped(Topology::make(2, {0, 0b01, 0b11}), Preorder::discrete(2));
  EXPECT_EQ(find_pretop_iso(s, swapped), (PointMap{1, 0}));
  EXPECT_FALSE(find_homeomorphism(sierpinski(), Topology::discrete(2)).has_value());
  const Lattice b = Lattice::from_family({0, 1, 2, 3});
  EXPECT_EQ(lattice_isos(b, b).size(), 2U);
}

TEST(Functors, RoundTrips) {
  EXPECT_EQ(underlying(discr(sierpinski())), sierpinski());
  const Topology one = Topology::discrete(1);
  EXPECT_EQ(ind_space(one), discr(one));
}

TEST(Distributive, ClassCounts) {
  // Distributive lattices up to isomorphism with 1..8 elements: 1,1,1,2,3,5,8,15.
  const auto lats = distributive_lattices(8);
  std::vector<int> by_size(9, 0);
  for (const auto& l : lats) {
    EXPECT_TRUE(is_distributive(l));
    ++by_size[l.size()];
  }
  EXPECT_EQ(by_size, (std::vector<int>{0, 1, 1, 1, 2, 3, 5, 8, 15}));
}

TEST(LiftedPreorder, MaximalityAgainstBruteForce) {
  const Topology e = Topology::discrete(3);
  EXPECT_EQ(lifted_preorder(e, {}).order(), Preorder::indiscrete(3));
  const Preorder chain = Preorder::from_pairs(3, std::vector<OrderPair>{{0, 1}, {1, 2}});
  EXPECT_EQ(lifted_preorder(e, {{identity_map(3), Space(e, chain)}}).order(), chain);

  const auto spaces = enumerate_spaces(2);
  for (const auto& y1 : spaces) {
    for (const auto& y2 : spaces) {
      for (const auto& g1 : continuous_maps(e, y1.topology())) {
        for (const auto& g2 : continuous_maps(e, y2.topology())) {
          const std::vector<std::pair<PointMap, Space>> targets{{g1, y1}, {g2, y2}};
          const Preorder got = lifted_preorder(e, targets).order();
          EXPECT_TRUE(all_monotone(got, targets));
          for (const auto& p : enumerate_preorders(3)) {
            if (all_monotone(p, targets)) EXPECT_TRUE(p.contained_in(got));
          }
        }
      }
    }
  }
}

TEST(Triangle, SeededCasesAtThreePoints) {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 60; ++i) {
    const Space x = random_space(3, rng());
    const Space y = random_space(3, rng());
    const auto maps = morphisms(x, y);
    if (maps.empty()) continue;
    for (Variant v : kAllVariants) {
      const AdFrame fy = build_adO(y, v);
      const Spectrum sy = adpt_space(fy);
      const PointMap f = compose(eta_map(y, fy, sy), maps[rng() % maps.size()]);
      EXPECT_EQ(triangle_case(x, y, v, f), "");
    }
  }
}

TEST(Errors, BudgetGuards) {
  EXPECT_THROW(enumerate_topologies(5), Error);
  EXPECT_THROW(continuous_maps(Topology::discrete(6), Topology::discrete(6), 10), Error);
}
