#include <gtest/gtest.h>

#include "cdiff/theory.hpp"
#include "cdiff/verify.hpp"

using namespace cdiff;

TEST(Prediction, Ranges) {
  const Prediction e = Prediction::exact(4, {"x"});
  EXPECT_EQ(e.rangeLo(), 4u);
  EXPECT_EQ(e.rangeHi(), 4u);
  EXPECT_TRUE(e.contains(4));
  EXPECT_FALSE(e.contains(3));
  const Prediction b = Prediction::bounded(3, 5);
  EXPECT_TRUE(b.clauses.empty());
  EXPECT_TRUE(b.contains(3) && b.contains(5));
  EXPECT_FALSE(b.contains(6));
}

TEST(ChiCongruence, AgreesWithFieldCharacter) {
  for (const auto& [p, n] : oddPrimePowers(2, 400)) {
    const FieldPtr k = makeField(p, n);
    for (const int v : {-1, 5, -3, 2}) {
      if ((v == 5 && p == 5) || (v == -3 && p == 3)) {
        EXPECT_THROW(chiCongruenceTable(v, p, n), std::invalid_argument);
        continue;
      }
      EXPECT_EQ(chiCongruenceTable(v, p, n), k->chi(k->fromInt(v))) << "q=" << k->q() << " v=" << v;
    }
  }
  EXPECT_EQ(chiCongruenceTable(-1, 7, 1), -1);
  EXPECT_EQ(chiCongruenceTable(2, 7, 1), 1);
  EXPECT_EQ(chiCongruenceTable(-3, 13, 1), 1);
}

TEST(PredictDuInv, Examples) {
  EXPECT_EQ(predictDuInv(7, 1).value, 4u);
  EXPECT_EQ(predictDuInv(5, 1).value, 2u);
  EXPECT_EQ(predictDuInv(3, 4).value, 3u);
  EXPECT_FALSE(predictDuInv(7, 1).clauses.empty());
}

TEST(PredictCduInv, Examples) {
  const FieldPtr f7 = makeField(7, 1);
  EXPECT_EQ(predictCduInv(*f7, Elem{4}).value, 2u);
  // 2 = 4^-1 in F_7; brute force gives 2.
  EXPECT_EQ(predictCduInv(*f7, Elem{2}).value, 2u);
  EXPECT_EQ(cUniformity(inverseTable(f7), Elem{2}).maxCount, 2u);
  const FieldPtr f11 = makeField(11, 1);
  EXPECT_EQ(predictCduInv(*f11, Elem{3}).value, 2u);
}

TEST(PredictCduSwap01, Examples) {
  const FieldPtr f17 = makeField(17, 1);
  const Prediction p17 = predictCduSwap01(*f17, f17->neg(f17->inv0(f17->fromInt(2))));
  EXPECT_EQ(p17.kind, Prediction::Kind::Exact);
  EXPECT_EQ(p17.value, 5u);
  EXPECT_NE(std::find(p17.clauses.begin(), p17.clauses.end(), "swap01.minus2"), p17.clauses.end());

  const FieldPtr f7 = makeField(7, 1);
  EXPECT_EQ(predictCduSwap01(*f7, f7->one()), Prediction::exact(4, {"swap01.c1.sqrt_minus3"}));
  EXPECT_EQ(predictCduSwap01(*makeField(3, 2), Elem{1}).value, 5u);
}

TEST(PredictLemmaA1, Examples) {
  EXPECT_EQ(predictLemmaA1(*makeField(7, 1)), 5u);
  EXPECT_EQ(predictLemmaA1(*makeField(13, 1)), 3u);
  EXPECT_EQ(predictLemmaA1(*makeField(17, 1)), 5u);
}

TEST(PredictDuSwap1g, Examples) {
  const FieldPtr f25 = makeField(5, 2);
  EXPECT_EQ(predictDuSwap1g(*f25, f25->fromInt(-1)).value, 7u);
  const FieldPtr f41 = makeField(41, 1);
  EXPECT_EQ(predictDuSwap1g(*f41, f41->fromInt(-1)).value, 6u);
  const FieldPtr f19 = makeField(19, 1);
  const Prediction p19 = predictDuSwap1g(*f19, f19->fromInt(-1));
  EXPECT_EQ(p19.value, 6u);
  EXPECT_EQ(cUniformity(swap1g(f19, f19->fromInt(-1)), f19->one()).maxCount, 6u);
  EXPECT_EQ(predictDuSwap1g(*f41, Elem{3}).rangeHi(), 5u);
}

TEST(PredictCduSwap1g, ExhaustiveOverF11) {
  const FieldPtr k = makeField(11, 1);
  for (std::uint32_t g = 2; g < 11; ++g) {
    const FuncTable f = swap1g(k, Elem{g});
    for (std::uint32_t c = 2; c < 11; ++c) {
      const Prediction pr = predictCduSwap1g(*k, Elem{g}, Elem{c});
      const std::uint32_t observed = cUniformity(f, Elem{c}).maxCount;
      EXPECT_TRUE(pr.contains(observed)) << "gamma=" << g << " c=" << c;
      EXPECT_EQ(observed == 6, pr.kind == Prediction::Kind::Exact) << "gamma=" << g << " c=" << c;
    }
  }
}

TEST(PredictCduSwap1g, GammaMinusOneNeverSix) {
  const FieldPtr k = makeField(13, 1);
  for (std::uint32_t c = 2; c < 13; ++c) EXPECT_LE(predictCduSwap1g(*k, k->fromInt(-1), Elem{c}).rangeHi(), 5u);
}

TEST(OutsidePa, Examples) {
  const FieldPtr f7 = makeField(7, 1);
  EXPECT_TRUE(outsidePaPredicate(*f7, Family::swap01(), Elem{3}, Elem{1}, Elem{4}));
  for (const Elem c : f7->elements()) {
    EXPECT_FALSE(outsidePaPredicate(*f7, Family::swap01(), c, Elem{2}, f7->zero()));
  }
  EXPECT_THROW(outsidePaPredicate(*f7, Family::swap01(), Elem{3}, f7->zero(), Elem{4}), std::invalid_argument);
}

TEST(OutsidePa, ExhaustiveOverF9) {
  const FieldPtr k = makeField(3, 2);
  std::vector<Family> fams{Family::swap01()};
  for (std::uint32_t g = 2; g < 9; ++g) fams.push_back(Family::swap1g(Elem{g}));
  for (const auto& fam : fams) {
    const FuncTable f = familyTable(k, fam);
    for (std::uint32_t c = 1; c < 9; ++c) {
      for (std::uint32_t a = 1; a < 9; ++a) {
        for (const Elem b : k->elements()) {
          EXPECT_EQ(outsidePaPredicate(*k, fam, Elem{c}, Elem{a}, b),
                    paProbe(f, fam, Elem{c}, Elem{a}, b).countOutsidePa == 2);
        }
      }
    }
  }
}

TEST(PaFourcase, ProbeConfirmsFourOverF11) {
  const FieldPtr k = makeField(11, 1);
  int found = 0;
  for (std::uint32_t g = 2; g < 11; ++g) {
    const Elem gamma{g};
    const Family fam = Family::swap1g(gamma);
    for (std::uint32_t c = 2; c < 11; ++c) {
      if (gamma == k->fromInt(-1)) {
        EXPECT_FALSE(paFourcaseSwap1g(*k, gamma, Elem{c}).has_value());
        continue;
      }
      const auto ab = paFourcaseSwap1g(*k, gamma, Elem{c});
      if (!ab) continue;
      ++found;
      EXPECT_EQ(paProbe(k, fam, Elem{c}, ab->first, ab->second).countInPa, 4u) << "gamma=" << g << " c=" << c;
    }
  }
  EXPECT_GT(found, 0);
}

TEST(DuFourcase, Examples) {
  const FieldPtr f41 = makeField(41, 1);
  EXPECT_TRUE(duFourcaseSwap1g(*f41, Elem{3}).empty());
  const Elem m1 = f41->fromInt(-1);
  const auto pairs41 = duFourcaseSwap1g(*f41, m1);
  bool sawSqrt2 = false;
  for (const auto& [a, b] : pairs41) {
    EXPECT_EQ(paProbe(f41, Family::swap1g(m1), f41->one(), a, b).countInPa, 4u);
    if (f41->mul(a, a) == f41->fromInt(2) && a == b) sawSqrt2 = true;
  }
  EXPECT_TRUE(sawSqrt2);

  const FieldPtr f11 = makeField(11, 1);
  const Elem g11 = f11->fromInt(-1);
  const auto pairs11 = duFourcaseSwap1g(*f11, g11);
  ASSERT_FALSE(pairs11.empty());
  for (const auto& [a, b] : pairs11) {
    const Elem a2 = f11->mul(a, a);
    EXPECT_EQ(f11->add(f11->sub(f11->mul(a2, a2), f11->mul(f11->fromInt(3), a2)), f11->one()), f11->zero());
    EXPECT_EQ(paProbe(f11, Family::swap1g(g11), f11->one(), a, b).countInPa, 4u);
  }
}
