#include "oracles.hpp"

#include "rca/errors.hpp"
#include "rca/fuzz.hpp"
#include "rca/rough.hpp"

#include <gtest/gtest.h>

using namespace rca;

namespace {

// I = ≤ of a poset, so the closure of {a} is the principal down-set of a.
FormalContext posetContext() {
  // 0 < 1 < 3, 0 < 2 < 3
  BinaryRelation le(4, 4);
  const std::pair<int, int> pairs[] = {{0, 0}, {1, 1}, {2, 2}, {3, 3}, {0, 1}, {0, 2}, {0, 3}, {1, 3}, {2, 3}};
  for (auto [a, b] : pairs) le.set(a, b);
  return FormalContext(le);
}

// a I x iff a != x: every object singleton is closed, so Id_A is I-compatible.
FormalContext distinctContext(std::size_t n) {
  BinaryRelation ne = BinaryRelation::full(n, n);
  for (std::size_t a = 0; a < n; ++a) ne.set(a, a, false);
  return FormalContext(ne);
}

}  // namespace

TEST(Partition, RejectsBadClasses) {
  EXPECT_THROW(Partition(3, {{0, 1}}), StructuralError);
  EXPECT_THROW(Partition(3, {{0, 1}, {1, 2}}), StructuralError);
  Partition p(3, {{2, 0}, {1}});
  EXPECT_EQ(p.classIndexOf(0), p.classIndexOf(2));
  EXPECT_NE(p.classIndexOf(0), p.classIndexOf(1));
}

TEST(Partition, FromEquivalence) {
  BinaryRelation e = BinaryRelation::identity(3);
  e.set(0, 1);
  EXPECT_THROW(Partition::fromEquivalence(e), StructuralError);
  e.set(1, 0);
  EXPECT_EQ(Partition::fromEquivalence(e), Partition(3, {{0, 1}, {2}}));
}

TEST(Rough, IdentityPartitionGivesIncidence) {
  Rng rng(1);
  for (int i = 0; i < 50; ++i) {
    FormalContext ctx = randomContext(rng, 4, 4);
    RoughFormalContext g(ctx, Partition::discrete(4));
    EXPECT_EQ(deriveLax(g), ctx.incidence());
    EXPECT_EQ(deriveStrict(g), ctx.incidence());
  }
}

TEST(Rough, SingleClassFillsColumns) {
  BinaryRelation i(3, 2);
  i.set(1, 0);
  RoughFormalContext g(FormalContext(i), Partition::indiscrete(3));
  BinaryRelation r = deriveLax(g);
  for (std::size_t a = 0; a < 3; ++a) {
    EXPECT_TRUE(r.contains(a, 0));
    EXPECT_FALSE(r.contains(a, 1));
  }
  EXPECT_EQ(deriveStrict(g).pairCount(), 0u);
}

TEST(Rough, DerivationsMatchDefinition) {
  Rng rng(7);
  for (int i = 0; i < 300; ++i) {
    RoughFormalContext g = randomRfc(rng, 5, 5);
    EXPECT_EQ(deriveLax(g), oracle::lax(g));
    EXPECT_EQ(deriveStrict(g), oracle::strict(g));
  }
}

TEST(Rough, SandwichOnRandomContexts) {
  Rng rng(8);
  for (int i = 0; i < 300; ++i) {
    RoughFormalContext g = randomRfc(rng, 5, 5);
    EXPECT_TRUE(verifySandwich(g).ok);
    EXPECT_TRUE(oracle::strict(g).isSubsetOf(g.ctx.incidence()));
    EXPECT_TRUE(g.ctx.incidence().isSubsetOf(oracle::lax(g)));
  }
}

TEST(Rough, CoarseningGrowsLaxShrinksStrict) {
  Rng rng(9);
  for (int i = 0; i < 200; ++i) {
    RoughFormalContext g = randomRfc(rng, 5, 4);
    const auto& cls = g.partition.classes();
    if (cls.size() < 2) continue;
    std::vector<std::vector<std::size_t>> merged(cls.begin() + 2, cls.end());
    std::vector<std::size_t> both = cls[0];
    both.insert(both.end(), cls[1].begin(), cls[1].end());
    merged.push_back(both);
    RoughFormalContext coarse(g.ctx, Partition(g.ctx.objectCount(), merged));
    EXPECT_TRUE(deriveLax(g).isSubsetOf(deriveLax(coarse)));
    EXPECT_TRUE(deriveStrict(coarse).isSubsetOf(deriveStrict(g)));
  }
}

TEST(Rough, EDefinability) {
  Rng rng(10);
  for (int i = 0; i < 100; ++i) {
    RoughFormalContext g = randomRfc(rng, 5, 5);
    EXPECT_TRUE(isEDefinable(deriveLax(g), g.partition).ok);
    EXPECT_TRUE(isEDefinable(deriveStrict(g), g.partition).ok);
    EXPECT_TRUE(isEDefinable(g.ctx.incidence(), Partition::discrete(g.ctx.objectCount())).ok);
  }
  BinaryRelation half(2, 1);
  half.set(0, 0);
  CheckResult r = isEDefinable(half, Partition::indiscrete(2));
  EXPECT_FALSE(r.ok);
  EXPECT_TRUE(r.witness.has_value());
  BinaryRelation notEquiv(2, 2);
  EXPECT_THROW(isEDefinable(half, notEquiv), StructuralError);
}

TEST(Rough, Compatibility) {
  Rng rng(12);
  for (int i = 0; i < 50; ++i) {
    FormalContext ctx = randomContext(rng, 4, 4);
    EXPECT_TRUE(isICompatible(ctx.incidence(), ctx, Orientation::ObjectFeature).ok);
  }
  // Objects 0 and 1 have the same row, so {0} is not closed and Id_A is not I-compatible.
  BinaryRelation i(2, 1);
  i.set(0, 0);
  i.set(1, 0);
  FormalContext ctx(i);
  EXPECT_FALSE(isICompatible(BinaryRelation::identity(2), ctx, Orientation::ObjectObject).ok);
  AmenabilityReport rep = isAmenable(RoughFormalContext(ctx, Partition::discrete(2)));
  EXPECT_FALSE(rep.e.ok);
  EXPECT_FALSE(rep.amenable());
}

TEST(Rough, AmenabilityExamples) {
  EXPECT_TRUE(isAmenable(RoughFormalContext(distinctContext(4), Partition::discrete(4))).amenable());
  // Only the bottom of the poset has a closed singleton.
  AmenabilityReport rep = isAmenable(RoughFormalContext(posetContext(), Partition::discrete(4)));
  EXPECT_FALSE(rep.e.ok);
  EXPECT_TRUE(rep.r.ok && rep.s.ok);
  EXPECT_TRUE(isAmenable(RoughFormalContext(FormalContext(BinaryRelation::full(3, 2)), Partition::indiscrete(3))).amenable());
}

TEST(Rough, AmenabilityMatchesDefinition) {
  Rng rng(13);
  int amenable = 0;
  for (int i = 0; i < 400; ++i) {
    RoughFormalContext g = randomRfc(rng, 4, 4);
    bool expect = oracle::amenable(g);
    EXPECT_EQ(isAmenable(g).amenable(), expect);
    amenable += expect;
  }
  EXPECT_GT(amenable, 20);
}

TEST(Rough, CompositionClausesMatchOracle) {
  Rng rng(14);
  int checked = 0;
  for (int i = 0; i < 300 && checked < 60; ++i) {
    auto s = randomAmenableRfc(rng, 5, 5);
    ASSERT_TRUE(s);
    const RoughFormalContext& g = s->rfc;
    BinaryRelation r = deriveLax(g), st = deriveStrict(g);
    const auto& I = g.ctx.incidence();
    EXPECT_EQ(composeByColumns(r, r, g.ctx), oracle::composeColumns(r, r, I));
    EXPECT_EQ(composeByRows(r, r, g.ctx), oracle::composeRows(r, r, I));
    EXPECT_EQ(oracle::composeColumns(st, st, I), oracle::composeRows(st, st, I));
    EXPECT_EQ(compose(r, st, g.ctx), oracle::composeColumns(r, st, I));
    ++checked;
  }
}

TEST(Rough, ComposeWithIncidence) {
  FormalContext ctx = posetContext();
  // Every feature singleton is closed here, so R;I = R for any compatible R.
  const auto& I = ctx.incidence();
  EXPECT_EQ(compose(I, I, ctx), I);
}

TEST(Rough, CompositionLawsOnAmenable) {
  Rng rng(15);
  for (int i = 0; i < 200; ++i) {
    auto s = randomAmenableRfc(rng, 5, 5);
    ASSERT_TRUE(s);
    const RoughFormalContext& g = s->rfc;
    EXPECT_TRUE(verifyKB(g).ok);
    const auto& I = g.ctx.incidence();
    BinaryRelation r = oracle::lax(g), st = oracle::strict(g);
    EXPECT_TRUE(oracle::composeColumns(r, r, I).isSubsetOf(r));
    EXPECT_TRUE(st.isSubsetOf(oracle::composeColumns(st, st, I)));
  }
}

TEST(Rough, DiscretePartitionReducesToIncidence) {
  FormalContext ctx = distinctContext(4);
  RoughFormalContext g(ctx, Partition::discrete(4));
  EXPECT_EQ(deriveLax(g), ctx.incidence());
  EXPECT_EQ(deriveStrict(g), ctx.incidence());
  EXPECT_TRUE(oracle::composeColumns(ctx.incidence(), ctx.incidence(), ctx.incidence()).isSubsetOf(ctx.incidence()));
  EXPECT_TRUE(verifyKB(g).ok);
}

TEST(Rough, CompositionLawsRefusedWhenNotAmenable) {
  BinaryRelation i(2, 1);
  i.set(0, 0);
  i.set(1, 0);
  RoughFormalContext g(FormalContext(i), Partition::discrete(2));
  EXPECT_THROW(verifyKB(g), PreconditionError);
}
