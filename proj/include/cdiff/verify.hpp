#pragma once

// Sweeps that compare closed-form predictions against brute-force counts
// over ranges of odd prime powers.

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cdiff/field.hpp"
#include "cdiff/theory.hpp"

namespace cdiff {

enum class TheoremId {
  DuInv,        // du_inv: Delta of Inv
  CduInv,       // cdu_inv: c-Delta of Inv, c outside {0, 1}
  DuSwap01,     // du_swap01: Delta of Inv o (0,1)
  CduSwap01,    // cdu_swap01: c-Delta of Inv o (0,1), c outside {0, 1}
  LemmaA1,      // lemma_a1: pointwise value at a = 1, b = 1/2, c = -1/2
  DuSwap1g,     // du_swap1g: Delta of Inv o (1,gamma)
  CduSwap1g,    // cdu_swap1g: c-Delta of Inv o (1,gamma)
  LbSwap1gGe3,  // lb_swap1g_ge3: c-Delta of Inv o (1,gamma) >= 3, early exit
};

const std::vector<TheoremId>& allTheorems();
std::string theoremName(TheoremId id);
/// Accepts the names above; "g" may also be spelled with a Greek gamma.
std::optional<TheoremId> parseTheorem(const std::string& name);
/// Fields at or below this order are skipped for the theorem.
std::uint32_t theoremMinQ(TheoremId id);

enum class Tier { Ci, Full };

struct QRange {
  std::uint32_t qMin = 0;  // exclusive
  std::uint32_t qMax = 0;  // inclusive
  std::vector<std::uint32_t> extraFields;
};

/// Default range per theorem and tier. The ci tier caps q below 125.
QRange tierRange(TheoremId id, Tier tier);

struct TheoremVerdict {
  std::string theoremId;
  std::uint32_t p = 0;
  std::uint32_t n = 0;
  std::uint32_t q = 0;
  std::optional<std::uint32_t> gamma;
  std::optional<std::uint32_t> c;
  std::optional<std::uint32_t> a;
  std::optional<std::uint32_t> b;
  Prediction predicted;
  std::uint32_t observed = 0;
  bool match = false;
  std::optional<std::pair<std::uint32_t, std::uint32_t>> witness;

  friend bool operator==(const TheoremVerdict&, const TheoremVerdict&) = default;
};

struct SweepOptions {
  QRange range;
  unsigned threads = 0;  // 0: hardware concurrency
  FieldOptions field;
  // Ranges beyond this order need force = true.
  std::uint32_t sweepCap = 4096;
  bool force = false;
  bool failFast = false;
  // Early-exit sweeps re-run every spotCheckStride-th instance in exact mode.
  std::uint32_t spotCheckStride = 100;
};

struct SweepSummary {
  std::string theoremId;
  std::uint64_t fieldsChecked = 0;
  std::uint64_t instancesChecked = 0;
  std::uint64_t mismatches = 0;
  double elapsedSeconds = 0.0;
  std::string configHash;
};

/// Odd prime powers q with qMin < q <= qMax, ascending.
std::vector<std::pair<std::uint32_t, std::uint32_t>> oddPrimePowers(std::uint32_t qMin, std::uint32_t qMax);

using VerdictSink = std::function<void(const TheoremVerdict&)>;

/// Runs the theorem over every field in the range (plus extra fields) and
/// feeds verdicts to sink in (q, gamma, c) order. The order and content do not
/// depend on the worker count. Throws std::invalid_argument for a range above
/// the sweep cap without force.
SweepSummary sweep(TheoremId id, const SweepOptions& options, const VerdictSink& sink = {});

/// Instances the theorem has over one field of order q.
std::uint64_t expectedInstances(TheoremId id, std::uint32_t q);

// --- Reports --------------------------------------------------------------

enum class ReportFormat { Csv, Json };

/// Streams verdicts to a CSV or JSON file. The output is a pure function of
/// the verdict sequence.
class ReportWriter {
 public:
  ReportWriter(std::ostream& out, ReportFormat format);
  ~ReportWriter();
  ReportWriter(const ReportWriter&) = delete;
  ReportWriter& operator=(const ReportWriter&) = delete;

  void write(const TheoremVerdict& v);
  void finish();

 private:
  std::ostream& out_;
  ReportFormat format_;
  bool first_ = true;
  bool finished_ = false;
};

inline constexpr const char* kCsvHeader =
    "theorem_id,p,n,q,gamma,c,predicted_lo,predicted_hi,observed,match,witness_a,witness_b,clauses";

void writeReport(const std::vector<TheoremVerdict>& verdicts, ReportFormat format, const std::string& path);
std::vector<TheoremVerdict> readJsonReport(const std::string& path);

// --- Suites -----------------------------------------------------------------

struct SuiteReport {
  bool passed = true;
  std::uint64_t checks = 0;
  std::vector<std::string> failures;  // capped

  void check(bool ok, const std::string& what);
};

/// Randomized invariants of the counting engine on fields with q <= 125,
/// plus the exhaustive outside-P_a predicate check on F_9 and F_11.
SuiteReport propertySuite(std::uint64_t seed, std::uint32_t trials);

/// The concrete exception-set cases of the Inv o (1,gamma) small-a analysis.
SuiteReport appendixSuite();

}  // namespace cdiff
