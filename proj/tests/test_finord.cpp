#include <gtest/gtest.h>

#include "adlab/error.hpp"
#include "adlab/finord.hpp"
#include "adlab/theorems.hpp"
#include "oracles.hpp"

using namespace adlab;

namespace {

Space term() { return Space(Topology::make(1, {0, 1}), Preorder::discrete(1)); }
Topology sierpinski() { return Topology::make(2, {0, 0b10, 0b11}); }

void expect_kind(ErrorKind kind, const auto& f) {
  try {
    f();
    ADD_FAILURE() << "no error thrown";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), kind) << e.what();
  }
}

}  // namespace

TEST(Topology, ValidatesAxioms) {
  EXPECT_EQ(term().size(), 1);
  EXPECT_EQ(Topology::make(0, {0}).opens().size(), 1U);
  expect_kind(ErrorKind::NotATopology, [] { Topology::make(2, {0, 0b10}); });
  expect_kind(ErrorKind::NotATopology, [] { Topology::make(2, {0b01, 0b11}); });
  expect_kind(ErrorKind::NotATopology, [] { Topology::make(3, {0, 0b001, 0b010, 0b111}); });
  const Topology t = Topology::make(3, {0b001, 0b010}, true);
  EXPECT_EQ(t.opens().size(), 5U);  // {}, {0}, {1}, {0,1}, X
}

TEST(Topology, OpensInCanonicalOrder) {
  const Topology t = Topology::make(2, {0b11, 0b10, 0b01, 0});
  const std::vector<Subset> want{0, 0b01, 0b10, 0b11};
  EXPECT_EQ(std::vector<Subset>(t.opens().begin(), t.opens().end()), want);
}

TEST(Topology, ClosureMatchesOracle) {
  EXPECT_EQ(sierpinski().closure(0b10), 0b11U);
  for (int n = 0; n <= 3; ++n) {
    for (const auto& t : enumerate_topologies(n)) {
      EXPECT_EQ(t.closure(0), 0U);
      for (Subset s = 0; s <= bits::full(n); ++s) {
        EXPECT_EQ(t.closure(s), oracle::closure(t, s));
        EXPECT_EQ(t.interior(s), bits::full(n) & ~oracle::closure(t, bits::full(n) & ~s));
        if (n == 0) break;
      }
    }
  }
}

TEST(Preorder, ClosesInputPairs) {
  const std::vector<OrderPair> pairs{{0, 1}, {1, 2}};
  const Preorder p = Preorder::from_pairs(3, pairs);
  EXPECT_TRUE(p.leq(0, 2));
  EXPECT_FALSE(p.leq(2, 0));
  expect_kind(ErrorKind::NotAPreorder, [&] { Preorder::from_pairs(3, pairs, true); });
  const Preorder chain = Preorder::from_pairs(2, std::vector<OrderPair>{{0, 1}});
  EXPECT_EQ(chain.upclose(0b01), 0b11U);
}

TEST(Space, ValidateSpaceReportsIndexErrors) {
  SpaceInput in;
  in.points = 2;
  in.opens = {0, 0b11};
  in.leq = {{0, 5}};
  expect_kind(ErrorKind::IndexOutOfRange, [&] { validate_space(in); });
  in.leq.clear();
  in.opens = {0, 0b1};
  expect_kind(ErrorKind::NotATopology, [&] { validate_space(in); });
}

TEST(SubsetLattice, UpsetExamples) {
  const Lattice t = subset_lattice(term(), SubsetKind::Upsets);
  EXPECT_EQ(t.size(), 2);
  EXPECT_EQ(t.label(0), 0U);
  EXPECT_EQ(t.label(1), 1U);
  const Space discrete2(Topology::discrete(2), Preorder::discrete(2));
  EXPECT_EQ(subset_lattice(discrete2, SubsetKind::Upsets).size(), 4);
  const Space chain(Topology::discrete(2), Preorder::from_pairs(2, std::vector<OrderPair>{{0, 1}}));
  const Lattice c = subset_lattice(chain, SubsetKind::Upsets);
  ASSERT_EQ(c.size(), 3);
  EXPECT_EQ(c.label(1), 0b10U);
  EXPECT_EQ(c.covers().size(), 2U);
}

TEST(SubsetLattice, UpsetsMatchOracle) {
  for (int n = 0; n <= 3; ++n) {
    for (const auto& p : enumerate_preorders(n)) {
      auto got = upsets(p);
      std::sort(got.begin(), got.end());
      EXPECT_EQ(got, oracle::upsets(p));
    }
  }
}

TEST(Specialization, Examples) {
  const Preorder s = specialization_preorder(sierpinski());
  EXPECT_TRUE(s.leq(0, 1));
  EXPECT_FALSE(s.leq(1, 0));
  EXPECT_EQ(specialization_preorder(Topology::discrete(2)), Preorder::discrete(2));
  EXPECT_EQ(specialization_preorder(Topology::indiscrete(2)), Preorder::indiscrete(2));
  for (const auto& t : enumerate_topologies(3)) {
    const Preorder p = specialization_preorder(t);
    for (int x = 0; x < 3; ++x) {
      for (int y = 0; y < 3; ++y) EXPECT_EQ(p.leq(x, y), oracle::specialization_leq(t, x, y));
    }
  }
}

TEST(LatticeAnalysis, TwoElementLattice) {
  const LatticeAnalysis a = lattice_analyze(Lattice::chain(2));
  EXPECT_TRUE(a.distributive);
  EXPECT_EQ(a.primes, std::vector<int>{0});
  EXPECT_EQ(a.coprimes, std::vector<int>{1});
  EXPECT_EQ(a.pitchfork, (std::vector<OrderPair>{{0, 1}}));
}

TEST(LatticeAnalysis, DiamondIsNotDistributive) {
  // M3: bottom 0, atoms 1..3, top 4.
  const std::vector<OrderPair> pairs{{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}};
  const Lattice m3 = Lattice::from_order(5, pairs);
  EXPECT_FALSE(is_distributive(m3));
  const std::vector<OrderPair> n5{{0, 1}, {1, 2}, {0, 3}, {2, 4}, {3, 4}};
  EXPECT_FALSE(is_distributive(Lattice::from_order(5, n5)));
}

TEST(LatticeAnalysis, BooleanSquarePitchforks) {
  const Lattice b = Lattice::from_family({0, 0b01, 0b10, 0b11});
  const LatticeAnalysis a = lattice_analyze(b);
  // (q, b): the atom below nothing else pairs with the complementary atom.
  EXPECT_EQ(a.pitchfork, (std::vector<OrderPair>{{1, 2}, {2, 1}}));
}

TEST(LatticeAnalysis, PitchforkPairsAreByDefinition) {
  for (const auto& l : distributive_lattices(8)) {
    const LatticeAnalysis a = lattice_analyze(l);
    std::vector<OrderPair> brute;
    for (int q = 0; q < l.size(); ++q) {
      for (int b = 0; b < l.size(); ++b) {
        bool ok = true;
        for (int x = 0; x < l.size(); ++x) ok = ok && (l.leq(b, x) == !l.leq(x, q));
        if (ok) brute.emplace_back(q, b);
      }
    }
    std::sort(brute.begin(), brute.end());
    auto got = a.pitchfork;
    std::sort(got.begin(), got.end());
    EXPECT_EQ(got, brute);
    // Each q and each b appears at most once.
    std::set<int> qs, bs;
    for (const auto& [q, b] : got) {
      EXPECT_TRUE(qs.insert(q).second);
      EXPECT_TRUE(bs.insert(b).second);
    }
  }
}

TEST(LatticeFromOrder, RejectsNonLattices) {
  const std::vector<OrderPair> v{{0, 1}, {0, 2}};
  expect_kind(ErrorKind::NotALattice, [&] { Lattice::from_order(3, v); });
  const std::vector<OrderPair> chain{{0, 1}, {1, 2}};
  EXPECT_EQ(Lattice::from_order(3, chain).covers().size(), 2U);
}

TEST(IrreducibleClosed, Examples) {
  EXPECT_EQ(irreducible_closed_sets(sierpinski()), (std::vector<Subset>{0b01, 0b11}));
  EXPECT_EQ(irreducible_closed_sets(Topology::indiscrete(2)), (std::vector<Subset>{0b11}));
  EXPECT_TRUE(irreducible_closed_sets(Topology::make(0, {0})).empty());
}

TEST(IrreducibleClosed, MatchesOracleAndPointClosuresOnT0) {
  for (int n = 0; n <= 4; ++n) {
    for (const auto& t : enumerate_topologies(n)) {
      auto got = irreducible_closed_sets(t);
      std::sort(got.begin(), got.end());
      EXPECT_EQ(got, oracle::irreducible_closed(t));
      if (!specialization_preorder(t).is_antisymmetric()) continue;
      std::vector<Subset> closures;
      for (int x = 0; x < n; ++x) closures.push_back(t.closure(bits::single(x)));
      std::sort(closures.begin(), closures.end());
      closures.erase(std::unique(closures.begin(), closures.end()), closures.end());
      EXPECT_EQ(got, closures);
    }
  }
}

TEST(EquivalenceClasses, Examples) {
  EXPECT_EQ(equivalence_classes(Preorder::discrete(3)).classes, (std::vector<Subset>{1, 2, 4}));
  EXPECT_EQ(equivalence_classes(Preorder::indiscrete(2)).classes, (std::vector<Subset>{3}));
  const Preorder chain = Preorder::from_pairs(2, std::vector<OrderPair>{{0, 1}});
  EXPECT_EQ(equivalence_classes(chain).classes, (std::vector<Subset>{1, 2}));
}

TEST(Maps, ContinuityAndMonotonicityWitnesses) {
  const PointMap swap{1, 0};
  EXPECT_FALSE(is_continuous(swap, sierpinski(), sierpinski()));
  EXPECT_TRUE(continuity_witness(swap, sierpinski(), sierpinski()).has_value());
  const Preorder chain = Preorder::from_pairs(2, std::vector<OrderPair>{{0, 1}});
  EXPECT_EQ(monotonicity_witness(swap, chain, chain), (OrderPair{0, 1}));
  EXPECT_TRUE(is_homeomorphism(swap, Topology::discrete(2), Topology::discrete(2)));
  EXPECT_EQ(compose(swap, swap), identity_map(2));
}

TEST(SemiClosed, Examples) {
  const Space discrete(Topology::discrete(2), Preorder::from_pairs(2, std::vector<OrderPair>{{0, 1}}));
  EXPECT_TRUE(upper_semi_closed(discrete));
  EXPECT_TRUE(lower_semi_closed(discrete));
  const Space s(sierpinski(), Preorder::from_pairs(2, std::vector<OrderPair>{{1, 0}}));
  // up(1) = {0,1} is closed; up(0) = {0} is closed; down(0) = {0,1}; down(1) = {1} is not closed.
  EXPECT_TRUE(upper_semi_closed(s));
  EXPECT_FALSE(lower_semi_closed(s));
}

TEST(Enumeration, CountsMatchOracles) {
  const long expected[] = {1, 1, 4, 29, 355};
  for (int n = 0; n <= 4; ++n) {
    EXPECT_EQ(static_cast<long>(enumerate_topologies(n).size()), expected[n]);
    EXPECT_EQ(static_cast<long>(enumerate_preorders(n).size()), expected[n]);
  }
  for (int n = 0; n <= 3; ++n) {
    EXPECT_EQ(oracle::count_topologies(n), expected[n]);
    EXPECT_EQ(oracle::count_preorders(n), expected[n]);
  }
  EXPECT_EQ(enumerate_spaces(2).size(), 16U);
  EXPECT_EQ(enumerate_spaces(3).size(), 841U);
  EXPECT_EQ(enumerate_spaces(3, SpaceMode::T0).size(), 19U * 29U);
}

TEST(Enumeration, AlexandroffBijection) {
  // On finite sets, topologies and preorders correspond through the
  // specialization preorder.
  for (int n = 0; n <= 3; ++n) {
    std::set<std::vector<Subset>> rows;
    for (const auto& t : enumerate_topologies(n)) {
      const Preorder p = specialization_preorder(t);
      rows.insert({p.rows().begin(), p.rows().end()});
    }
    EXPECT_EQ(rows.size(), enumerate_preorders(n).size());
  }
}

TEST(LatticeCap, TooLarge) {
  const int saved = lattice_cap();
  set_lattice_cap(3);
  expect_kind(ErrorKind::TooLarge, [] { Lattice::chain(4); });
  set_lattice_cap(saved);
}
