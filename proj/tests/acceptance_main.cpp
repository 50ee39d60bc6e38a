// Acceptance suite: one PASS/FAIL line per criterion. Every tolerance is 0.
// Pass --ci to shrink the theorem ranges to the ci tier.

#include <chrono>
#include <cstring>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "cdiff/verify.hpp"

using namespace cdiff;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

// Runs the sweep; check(v) returns an error for a verdict that violates the
// criterion's extra conditions, or an empty string.
Outcome sweepCriterion(TheoremId id, const QRange& range,
                       const std::function<std::string(const TheoremVerdict&)>& check) {
  SweepOptions opts;
  opts.range = range;
  std::uint64_t violations = 0;
  std::string first;
  const SweepSummary s = sweep(id, opts, [&](const TheoremVerdict& v) {
    std::string err = v.match ? check(v) : "observed " + std::to_string(v.observed) + " outside " +
                                              v.predicted.describe();
    if (err.empty()) return;
    if (violations++ == 0) {
      first = "q=" + std::to_string(v.q) + (v.gamma ? " gamma=" + std::to_string(*v.gamma) : "") +
              (v.c ? " c=" + std::to_string(*v.c) : "") + ": " + err;
    }
  });
  std::ostringstream out;
  out << "fields=" << s.fieldsChecked << " instances=" << s.instancesChecked << " violations=" << violations;
  if (!first.empty()) out << " first: " << first;
  return {violations == 0 && s.instancesChecked > 0, out.str()};
}

QRange pick(TheoremId id, bool ci) { return tierRange(id, ci ? Tier::Ci : Tier::Full); }

// gamma = -1 in any field: the prime-subfield element p - 1.
bool gammaIsMinusOne(const TheoremVerdict& v) { return v.gamma && *v.gamma == v.p - 1; }

}  // namespace

int main(int argc, char** argv) {
  const bool ci = argc > 1 && std::strcmp(argv[1], "--ci") == 0;
  int failures = 0;
  auto report = [&](int number, const std::string& name, const std::function<Outcome()>& body) {
    const auto start = std::chrono::steady_clock::now();
    const Outcome o = body();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << number << " " << name << " [tol 0] " << o.detail
              << " (" << secs << "s)" << std::endl;
    failures += !o.ok;
  };

  report(1, "du_inv exact classification", [&] {
    return sweepCriterion(TheoremId::DuInv, pick(TheoremId::DuInv, ci), [](const auto&) { return std::string{}; });
  });

  report(2, "cdu_inv in {2,3} and exact", [&] {
    return sweepCriterion(TheoremId::CduInv, pick(TheoremId::CduInv, ci), [](const TheoremVerdict& v) {
      return v.observed == 2 || v.observed == 3 ? std::string{} : "observed outside {2,3}";
    });
  });

  report(3, "du_swap01 exact in {3,4,5}", [&] {
    return sweepCriterion(TheoremId::DuSwap01, pick(TheoremId::DuSwap01, ci), [](const TheoremVerdict& v) {
      if (v.predicted.kind != Prediction::Kind::Exact) return std::string("prediction not exact");
      return v.observed >= 3 && v.observed <= 5 ? std::string{} : "observed outside {3,4,5}";
    });
  });

  report(4, "cdu_swap01 five iff exact(5), else {3,4}", [&] {
    return sweepCriterion(TheoremId::CduSwap01, pick(TheoremId::CduSwap01, ci), [](const TheoremVerdict& v) {
      const bool five = v.predicted.kind == Prediction::Kind::Exact && v.predicted.value == 5;
      if ((v.observed == 5) != five) return std::string("five does not match exact(5)");
      if (v.observed < 3 || v.observed > 5) return std::string("observed outside [3,5]");
      return std::string{};
    });
  });

  report(5, "lemma_a1 pointwise 5 or 3 by q mod 8", [&] {
    return sweepCriterion(TheoremId::LemmaA1, pick(TheoremId::LemmaA1, ci), [](const TheoremVerdict& v) {
      const std::uint32_t r = v.q % 8;
      const std::uint32_t want = (r == 1 || r == 7) ? 5 : 3;
      return v.observed == want ? std::string{} : "expected " + std::to_string(want);
    });
  });

  report(6, "du_swap1g seven/six/at most five", [&] {
    bool sawSeven25 = false, sawSix41 = false;
    Outcome o = sweepCriterion(TheoremId::DuSwap1g, pick(TheoremId::DuSwap1g, ci), [&](const TheoremVerdict& v) {
      const bool m1 = gammaIsMinusOne(v);
      const bool seven = m1 && v.p == 5 && v.n % 2 == 0;
      const bool six = m1 && !seven && (v.q % 8 == 1 || v.q % 15 == 1 || v.q % 15 == 4);
      if (v.q == 25 && m1) sawSeven25 = v.observed == 7;
      if (v.q == 41 && m1) sawSix41 = v.observed == 6;
      if ((v.observed == 7) != seven) return std::string("seven mismatch");
      if ((v.observed == 6) != six) return std::string("six mismatch");
      if (!seven && !six && v.observed > 5) return std::string("above five");
      return std::string{};
    });
    if (!sawSeven25 || !sawSix41) {
      o.ok = false;
      o.detail += " missing q=25 -> 7 or q=41 -> 6";
    }
    return o;
  });

  report(7, "cdu_swap1g six iff condition, else at most five", [&] {
    return sweepCriterion(TheoremId::CduSwap1g, pick(TheoremId::CduSwap1g, ci), [](const TheoremVerdict& v) {
      const bool six = v.predicted.kind == Prediction::Kind::Exact && v.predicted.value == 6;
      if ((v.observed == 6) != six) return std::string("six does not match the condition");
      if (!six && v.observed > 5) return std::string("above five");
      return std::string{};
    });
  });

  report(8, "lb_swap1g_ge3 early-exit sweep", [&] {
    return sweepCriterion(TheoremId::LbSwap1gGe3, pick(TheoremId::LbSwap1gGe3, ci), [](const TheoremVerdict& v) {
      return v.observed >= 3 ? std::string{} : std::string("below three");
    });
  });

  report(9, "appendix P_a counts", [] {
    const SuiteReport r = appendixSuite();
    return Outcome{r.passed, "checks=" + std::to_string(r.checks) + (r.failures.empty() ? "" : " first: " + r.failures[0])};
  });

  report(10, "property suite seed 0, 1000 trials", [] {
    const SuiteReport r = propertySuite(0, 1000);
    return Outcome{r.passed, "checks=" + std::to_string(r.checks) + (r.failures.empty() ? "" : " first: " + r.failures[0])};
  });

  std::cout << (failures == 0 ? "ALL PASS" : std::to_string(failures) + " FAILED") << std::endl;
  return failures == 0 ? 0 : 1;
}
