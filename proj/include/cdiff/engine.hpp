#pragma once

// Exhaustive c-differential counting.
//
// For F: F_q -> F_q, the c-derivative in direction a is
//   cD_aF(x) = F(x + a) - c F(x)
// and cDelta_F(a, b) counts the x with cD_aF(x) = b. The c-differential
// uniformity is the maximum over all (a, b), with a = 0 excluded when c = 1.
//
// Counting streams one (c, a) row at a time through a length-q accumulator;
// the full q x q table is never stored.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cdiff/field.hpp"
#include "cdiff/func_table.hpp"

namespace cdiff {

struct EngineOptions {
  unsigned threads = 1;
  std::size_t witnessCap = 16;
  // When nonzero, stop as soon as some count reaches this value. The report
  // then holds max_count = earlyExitAt and a single witness.
  std::uint32_t earlyExitAt = 0;
};

struct SpectrumReport {
  Elem c;
  std::uint32_t maxCount = 0;
  // (a, b) pairs attaining maxCount, smallest (a, b) first, capped.
  std::vector<std::pair<Elem, Elem>> witnesses;
  // count -> number of admissible (a, b) with that count. Empty when the
  // scan stopped early.
  std::map<std::uint32_t, std::uint64_t> histogram;
  // False when maxCount is only a lower bound from an early exit.
  bool exact = true;
};

enum class CFilter { All, Exclude0, Exclude01 };

struct PcnClass {
  enum class Kind { PcN, APcN, Neither };
  Kind kind;
  std::uint32_t maxCount;
  std::string toString() const;
};

std::uint32_t cdiffCount(const FuncTable& f, Elem c, Elem a, Elem b);

/// counts[b] = cDelta_F(a, b) for every b, in one pass over x.
std::vector<std::uint32_t> rowHistogram(const FuncTable& f, Elem c, Elem a);

SpectrumReport cUniformity(const FuncTable& f, Elem c, const EngineOptions& options = {});

/// One report per admissible c, in c index order.
std::vector<SpectrumReport> fullCSweep(const FuncTable& f, CFilter filter, const EngineOptions& options = {});

PcnClass classifyPcn(const SpectrumReport& report);

// --- Exception-set probes for the swapped inverse families -----------------

struct Family {
  enum class Kind { Swap01, Swap1g };
  Kind kind = Kind::Swap01;
  std::optional<Elem> gamma;

  static Family swap01() { return {Kind::Swap01, std::nullopt}; }
  static Family swap1g(Elem gamma) { return {Kind::Swap1g, gamma}; }
};

/// The table of the family's function. Throws for gamma in {0, 1}.
FuncTable familyTable(const FieldPtr& field, const Family& family);

/// P_a = P u (P - a) with P = {0, 1} or {0, 1, gamma}; sorted, deduplicated.
std::vector<Elem> paPoints(const Field& field, const Family& family, Elem a);

struct CaseProbe {
  std::optional<Elem> gamma;
  Elem c;
  Elem a;
  Elem b;
  std::uint32_t countInPa = 0;
  std::uint32_t countOutsidePa = 0;
  std::vector<Elem> pa;
  // Set for a = 0, where the split carries no information.
  bool degenerate = false;
};

/// f must be the family's table.
CaseProbe paProbe(const FuncTable& f, const Family& family, Elem c, Elem a, Elem b);
CaseProbe paProbe(const FieldPtr& field, const Family& family, Elem c, Elem a, Elem b);

}  // namespace cdiff
