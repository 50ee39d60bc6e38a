#include <gtest/gtest.h>

#include <numeric>

#include "cdiff/engine.hpp"

using namespace cdiff;

namespace {

// Independent oracle: full c-DDT from the definition, using plain modular
// arithmetic over a prime field.
std::uint32_t bruteUniformity(const FuncTable& f, std::uint32_t c) {
  const std::uint32_t p = f.field().q();
  std::uint32_t best = 0;
  for (std::uint32_t a = 0; a < p; ++a) {
    if (c == 1 && a == 0) continue;
    std::vector<std::uint32_t> counts(p, 0);
    for (std::uint32_t x = 0; x < p; ++x) {
      const std::uint32_t fx = f(Elem{x}).index();
      const std::uint32_t fxa = f(Elem{(x + a) % p}).index();
      ++counts[(fxa + p * p - c * fx) % p];
    }
    best = std::max(best, *std::max_element(counts.begin(), counts.end()));
  }
  return best;
}

}  // namespace

TEST(CdiffCount, Examples) {
  const FieldPtr f7 = makeField(7, 1);
  EXPECT_EQ(cdiffCount(swap01(f7), Elem{3}, Elem{1}, Elem{4}), 5u);
  const FieldPtr f5 = makeField(5, 1);
  EXPECT_EQ(cdiffCount(swap1g(f5, Elem{4}), f5->one(), Elem{2}, Elem{3}), 5u);
  const FuncTable inv = inverseTable(f7);
  for (const Elem a : f7->elements()) {
    for (const Elem b : f7->elements()) EXPECT_EQ(cdiffCount(inv, f7->zero(), a, b), 1u);
  }
}

TEST(RowHistogram, SumsAndAgreesWithCount) {
  const FieldPtr k = makeField(3, 3);
  const FuncTable f = swap1g(k, Elem{7});
  for (const Elem c : {Elem{0}, Elem{1}, Elem{5}}) {
    for (const Elem a : k->elements()) {
      const auto row = rowHistogram(f, c, a);
      EXPECT_EQ(std::accumulate(row.begin(), row.end(), 0u), k->q());
      for (const Elem b : k->elements()) EXPECT_EQ(row[b.index()], cdiffCount(f, c, a, b));
    }
  }
}

TEST(RowHistogram, ZeroShiftIsBijectiveForPermutations) {
  const FieldPtr k = makeField(11, 1);
  const auto row = rowHistogram(inverseTable(k), Elem{3}, k->zero());
  for (const auto v : row) EXPECT_EQ(v, 1u);
}

TEST(CUniformity, InverseValues) {
  EXPECT_EQ(cUniformity(inverseTable(makeField(7, 1)), Elem{1}).maxCount, 4u);
  EXPECT_EQ(cUniformity(inverseTable(makeField(5, 1)), Elem{1}).maxCount, 2u);
  EXPECT_EQ(cUniformity(swap01(makeField(7, 1)), Elem{1}).maxCount, 4u);
  EXPECT_EQ(cUniformity(inverseTable(makeField(7, 1)), Elem{0}).maxCount, 1u);
}

TEST(CUniformity, MatchesIndependentOracle) {
  for (const std::uint32_t p : {5u, 7u, 11u, 13u}) {
    const FieldPtr k = makeField(p, 1);
    std::vector<FuncTable> fs{inverseTable(k), swap01(k), swap1g(k, Elem{2}), swap1g(k, k->fromInt(-1))};
    for (const auto& f : fs) {
      for (std::uint32_t c = 0; c < p; ++c) EXPECT_EQ(cUniformity(f, Elem{c}).maxCount, bruteUniformity(f, c));
    }
  }
}

TEST(CUniformity, ReportIsConsistent) {
  const FieldPtr k = makeField(5, 2);
  const FuncTable f = swap1g(k, k->fromInt(-1));
  const SpectrumReport r = cUniformity(f, k->one());
  EXPECT_EQ(r.maxCount, 7u);
  EXPECT_TRUE(r.exact);
  ASSERT_FALSE(r.witnesses.empty());
  EXPECT_TRUE(std::is_sorted(r.witnesses.begin(), r.witnesses.end()));
  for (const auto& [a, b] : r.witnesses) EXPECT_EQ(cdiffCount(f, k->one(), a, b), 7u);
  std::uint64_t pairs = 0;
  for (const auto& [count, n] : r.histogram) pairs += n;
  EXPECT_EQ(pairs, std::uint64_t{k->q() - 1} * k->q());
  EXPECT_EQ(r.histogram.rbegin()->first, 7u);
}

TEST(CUniformity, DeterministicAcrossThreads) {
  const FieldPtr k = makeField(61, 1);
  const FuncTable f = swap1g(k, Elem{9});
  EngineOptions one, four;
  four.threads = 4;
  for (const Elem c : {Elem{1}, Elem{2}, Elem{30}}) {
    const SpectrumReport a = cUniformity(f, c, one);
    const SpectrumReport b = cUniformity(f, c, four);
    EXPECT_EQ(a.maxCount, b.maxCount);
    EXPECT_EQ(a.witnesses, b.witnesses);
    EXPECT_EQ(a.histogram, b.histogram);
  }
}

TEST(CUniformity, EarlyExitNeverOverstates) {
  const FieldPtr k = makeField(31, 1);
  const FuncTable f = swap1g(k, Elem{5});
  for (std::uint32_t c = 2; c < 31; ++c) {
    EngineOptions early;
    early.earlyExitAt = 3;
    const SpectrumReport e = cUniformity(f, Elem{c}, early);
    const SpectrumReport full = cUniformity(f, Elem{c});
    EXPECT_LE(e.maxCount, full.maxCount);
    if (!e.exact) {
      EXPECT_EQ(e.maxCount, 3u);
      ASSERT_EQ(e.witnesses.size(), 1u);
      EXPECT_GE(cdiffCount(f, Elem{c}, e.witnesses[0].first, e.witnesses[0].second), 3u);
    }
  }
}

TEST(FullCSweep, FilterLengthsAndInverseRange) {
  const FieldPtr k = makeField(7, 1);
  const FuncTable inv = inverseTable(k);
  EXPECT_EQ(fullCSweep(inv, CFilter::All).size(), 7u);
  EXPECT_EQ(fullCSweep(inv, CFilter::Exclude0).size(), 6u);
  const auto reports = fullCSweep(inv, CFilter::Exclude01);
  ASSERT_EQ(reports.size(), 5u);
  for (const auto& r : reports) {
    EXPECT_GE(r.maxCount, 2u);
    EXPECT_LE(r.maxCount, 3u);
  }
  EXPECT_EQ(fullCSweep(inv, CFilter::All)[0].maxCount, 1u);
}

TEST(ClassifyPcn, Labels) {
  SpectrumReport r;
  r.maxCount = 1;
  EXPECT_EQ(classifyPcn(r).kind, PcnClass::Kind::PcN);
  r.maxCount = 2;
  EXPECT_EQ(classifyPcn(r).kind, PcnClass::Kind::APcN);
  r.maxCount = 5;
  EXPECT_EQ(classifyPcn(r).toString(), "neither(5)");
}

TEST(PaProbe, Sets) {
  const FieldPtr k = makeField(7, 1);
  EXPECT_EQ(paPoints(*k, Family::swap01(), Elem{2}), (std::vector<Elem>{Elem{0}, Elem{1}, Elem{5}, Elem{6}}));
  EXPECT_EQ(paPoints(*k, Family::swap1g(Elem{3}), Elem{1}),
            (std::vector<Elem>{Elem{0}, Elem{1}, Elem{2}, Elem{3}, Elem{6}}));
}

TEST(PaProbe, SplitsTheCount) {
  const FieldPtr k = makeField(3, 2);
  for (const Family& fam : {Family::swap01(), Family::swap1g(Elem{5})}) {
    const FuncTable f = familyTable(k, fam);
    for (const Elem c : k->elements()) {
      for (const Elem a : k->elements()) {
        for (const Elem b : k->elements()) {
          const CaseProbe pr = paProbe(f, fam, c, a, b);
          EXPECT_EQ(pr.countInPa + pr.countOutsidePa, cdiffCount(f, c, a, b));
          EXPECT_EQ(pr.degenerate, a == k->zero());
          if (fam.kind == Family::Kind::Swap01 && !pr.degenerate) EXPECT_LE(pr.countOutsidePa, 2u);
        }
      }
    }
  }
}

TEST(PaProbe, ExceptionalCountsOverF5) {
  const FieldPtr k = makeField(5, 1);
  const Family fam = Family::swap1g(Elem{4});
  EXPECT_EQ(paProbe(k, fam, k->one(), Elem{2}, Elem{3}).countInPa, 5u);
  EXPECT_EQ(paProbe(k, fam, k->one(), Elem{1}, Elem{4}).countInPa, 4u);
}
