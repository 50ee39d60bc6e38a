#include "cdiff/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <map>
#include <sstream>

#include "cdiff/engine.hpp"
#include "cdiff/func_table.hpp"
#include "cdiff/parallel.hpp"

namespace cdiff {

namespace {

const std::map<TheoremId, std::string>& names() {
  static const std::map<TheoremId, std::string> table{
      {TheoremId::DuInv, "du_inv"},         {TheoremId::CduInv, "cdu_inv"},
      {TheoremId::DuSwap01, "du_swap01"},   {TheoremId::CduSwap01, "cdu_swap01"},
      {TheoremId::LemmaA1, "lemma_a1"},     {TheoremId::DuSwap1g, "du_swap1g"},
      {TheoremId::CduSwap1g, "cdu_swap1g"}, {TheoremId::LbSwap1gGe3, "lb_swap1g_ge3"},
  };
  return table;
}

struct Instance {
  std::optional<Elem> gamma;
  Elem c;
  std::optional<Elem> a;
  std::optional<Elem> b;
};

bool usesGamma(TheoremId id) {
  return id == TheoremId::DuSwap1g || id == TheoremId::CduSwap1g || id == TheoremId::LbSwap1gGe3;
}

std::vector<Instance> instancesFor(TheoremId id, const Field& k) {
  std::vector<Instance> out;
  const std::uint32_t q = k.q();
  switch (id) {
    case TheoremId::DuInv:
    case TheoremId::DuSwap01:
      out.push_back({std::nullopt, k.one(), std::nullopt, std::nullopt});
      break;
    case TheoremId::CduInv:
    case TheoremId::CduSwap01:
      for (std::uint32_t c = 2; c < q; ++c) out.push_back({std::nullopt, Elem{c}, std::nullopt, std::nullopt});
      break;
    case TheoremId::LemmaA1: {
      const Elem half = k.inv0(k.fromInt(2));
      out.push_back({std::nullopt, k.neg(half), k.one(), half});
      break;
    }
    case TheoremId::DuSwap1g:
      for (std::uint32_t g = 2; g < q; ++g) out.push_back({Elem{g}, k.one(), std::nullopt, std::nullopt});
      break;
    case TheoremId::CduSwap1g:
    case TheoremId::LbSwap1gGe3:
      for (std::uint32_t g = 2; g < q; ++g) {
        for (std::uint32_t c = 2; c < q; ++c) out.push_back({Elem{g}, Elem{c}, std::nullopt, std::nullopt});
      }
      break;
  }
  return out;
}

Prediction predictFor(TheoremId id, const Field& k, const Instance& in) {
  switch (id) {
    case TheoremId::DuInv:
      return predictDuInv(k.p(), k.n());
    case TheoremId::CduInv:
      return predictCduInv(k, in.c);
    case TheoremId::DuSwap01:
    case TheoremId::CduSwap01:
      return predictCduSwap01(k, in.c);
    case TheoremId::LemmaA1: {
      const std::uint32_t v = predictLemmaA1(k);
      return Prediction::exact(v, {v == 5 ? "swap01.a1.q_pm1_mod8" : "swap01.a1.q_pm3_mod8"});
    }
    case TheoremId::DuSwap1g:
      return predictDuSwap1g(k, *in.gamma);
    case TheoremId::CduSwap1g:
      return predictCduSwap1g(k, *in.gamma, in.c);
    case TheoremId::LbSwap1gGe3:
      return Prediction::bounded(3, k.q());
  }
  throw std::logic_error("unhandled theorem");
}

std::string hashConfig(const std::string& text) {
  std::uint64_t h = 1469598103934665603ull;
  for (const unsigned char ch : text) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace

const std::vector<TheoremId>& allTheorems() {
  static const std::vector<TheoremId> ids{TheoremId::DuInv,    TheoremId::CduInv,    TheoremId::DuSwap01,
                                          TheoremId::CduSwap01, TheoremId::LemmaA1,  TheoremId::DuSwap1g,
                                          TheoremId::CduSwap1g, TheoremId::LbSwap1gGe3};
  return ids;
}

std::string theoremName(TheoremId id) { return names().at(id); }

std::optional<TheoremId> parseTheorem(const std::string& name) {
  std::string normalized = name;
  const std::string greek = "\xCE\xB3";  // UTF-8 gamma
  for (std::size_t pos; (pos = normalized.find(greek)) != std::string::npos;) normalized.replace(pos, greek.size(), "g");
  for (const auto& [id, text] : names()) {
    if (text == normalized) return id;
  }
  return std::nullopt;
}

std::uint32_t theoremMinQ(TheoremId id) {
  switch (id) {
    case TheoremId::DuSwap01:
    case TheoremId::CduSwap01:
    case TheoremId::LemmaA1:
      return 5;
    case TheoremId::LbSwap1gGe3:
      return 7;
    default:
      return 0;
  }
}

QRange tierRange(TheoremId id, Tier tier) {
  QRange r;
  switch (id) {
    case TheoremId::DuInv:
    case TheoremId::DuSwap01:
    case TheoremId::LemmaA1:
      r = {5, 499, {}};
      break;
    case TheoremId::CduInv:
      r = {5, 249, {}};
      break;
    case TheoremId::CduSwap01:
      r = {5, 343, {}};
      break;
    case TheoremId::DuSwap1g:
      r = {0, 499, {}};
      break;
    case TheoremId::CduSwap1g:
      r = {0, 125, {169, 243}};
      break;
    case TheoremId::LbSwap1gGe3:
      r = {7, 499, {}};
      break;
  }
  if (tier == Tier::Ci) {
    r.qMax = std::min<std::uint32_t>(r.qMax, 124);
    r.extraFields.clear();
  }
  return r;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> oddPrimePowers(std::uint32_t qMin, std::uint32_t qMax) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  std::vector<bool> composite(static_cast<std::size_t>(qMax) + 1, false);
  for (std::uint64_t p = 2; p <= qMax; ++p) {
    if (composite[p]) continue;
    for (std::uint64_t m = p * p; m <= qMax; m += p) composite[m] = true;
    if (p == 2) continue;
    std::uint64_t q = p;
    for (std::uint32_t n = 1; q <= qMax; ++n, q *= p) {
      if (q > qMin) out.emplace_back(static_cast<std::uint32_t>(p), n);
    }
  }
  auto order = [](const auto& f) {
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < f.second; ++i) q *= f.first;
    return q;
  };
  std::sort(out.begin(), out.end(), [&](const auto& x, const auto& y) { return order(x) < order(y); });
  return out;
}

std::uint64_t expectedInstances(TheoremId id, std::uint32_t q) {
  if (q <= theoremMinQ(id)) return 0;
  const std::uint64_t m = q - 2;
  switch (id) {
    case TheoremId::DuInv:
    case TheoremId::DuSwap01:
    case TheoremId::LemmaA1:
      return 1;
    case TheoremId::CduInv:
    case TheoremId::CduSwap01:
    case TheoremId::DuSwap1g:
      return m;
    case TheoremId::CduSwap1g:
    case TheoremId::LbSwap1gGe3:
      return m * m;
  }
  return 0;
}

SweepSummary sweep(TheoremId id, const SweepOptions& options, const VerdictSink& sink) {
  const auto start = std::chrono::steady_clock::now();
  const std::string name = theoremName(id);
  const std::uint32_t minQ = theoremMinQ(id);

  // (q, p, n), ascending and unique.
  std::vector<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>> fields;
  for (const auto& [p, n] : oddPrimePowers(std::max(options.range.qMin, minQ), options.range.qMax)) {
    std::uint32_t q = 1;
    for (std::uint32_t i = 0; i < n; ++i) q *= p;
    fields.emplace_back(q, p, n);
  }
  for (const std::uint32_t q : options.range.extraFields) {
    const auto match = oddPrimePowers(q - 1, q);
    if (match.empty()) throw std::invalid_argument(std::to_string(q) + " is not an odd prime power");
    if (q > minQ) fields.emplace_back(q, match[0].first, match[0].second);
  }
  std::sort(fields.begin(), fields.end());
  fields.erase(std::unique(fields.begin(), fields.end()), fields.end());

  for (const auto& f : fields) {
    if (std::get<0>(f) > options.sweepCap && !options.force) {
      throw std::invalid_argument("field order " + std::to_string(std::get<0>(f)) + " exceeds the sweep cap " +
                                  std::to_string(options.sweepCap) + " (use force)");
    }
  }

  std::ostringstream config;
  config << "theorem=" << name << ";qmin=" << options.range.qMin << ";qmax=" << options.range.qMax << ";extra=";
  for (const auto q : options.range.extraFields) config << q << ",";
  config << ";cap=" << options.field.orderCap << ";spot=" << options.spotCheckStride
         << ";failfast=" << options.failFast;

  SweepSummary summary;
  summary.theoremId = name;
  summary.configHash = hashConfig(config.str());

  const bool earlyExit = id == TheoremId::LbSwap1gGe3;
  std::uint64_t globalIndex = 0;
  bool stopped = false;

  for (const auto& [q, p, n] : fields) {
    if (stopped) break;
    const FieldPtr k = makeField(p, n, options.field);
    const auto instances = instancesFor(id, *k);

    std::optional<FuncTable> shared;
    std::vector<std::optional<FuncTable>> perGamma;
    if (usesGamma(id)) {
      perGamma.resize(q);
      for (std::uint32_t g = 2; g < q; ++g) perGamma[g] = swap1g(k, Elem{g});
    } else if (id == TheoremId::DuInv || id == TheoremId::CduInv) {
      shared = inverseTable(k);
    } else {
      shared = swap01(k);
    }

    std::vector<TheoremVerdict> verdicts(instances.size());
    std::atomic<std::size_t> firstMismatch{instances.size()};
    const std::uint64_t base = globalIndex;

    parallelFor(instances.size(), options.threads, [&](std::size_t i, unsigned) {
      if (options.failFast && i > firstMismatch.load(std::memory_order_relaxed)) return;
      const Instance& in = instances[i];
      const FuncTable& f = in.gamma ? *perGamma[in.gamma->index()] : *shared;

      TheoremVerdict v;
      v.theoremId = name;
      v.p = p;
      v.n = n;
      v.q = q;
      if (in.gamma) v.gamma = in.gamma->index();
      v.c = in.c.index();
      if (in.a) v.a = in.a->index();
      if (in.b) v.b = in.b->index();
      v.predicted = predictFor(id, *k, in);

      std::optional<std::pair<std::uint32_t, std::uint32_t>> witness;
      bool spotFailed = false;
      if (id == TheoremId::LemmaA1) {
        v.observed = cdiffCount(f, in.c, *in.a, *in.b);
        witness = std::make_pair(in.a->index(), in.b->index());
      } else {
        EngineOptions eo;
        eo.threads = 1;
        eo.witnessCap = 1;
        if (earlyExit) eo.earlyExitAt = 3;
        const SpectrumReport r = cUniformity(f, in.c, eo);
        v.observed = r.maxCount;
        if (!r.witnesses.empty()) {
          witness = std::make_pair(r.witnesses[0].first.index(), r.witnesses[0].second.index());
        }
        if (earlyExit && options.spotCheckStride != 0 && (base + i) % options.spotCheckStride == 0) {
          eo.earlyExitAt = 0;
          const SpectrumReport full = cUniformity(f, in.c, eo);
          spotFailed = full.maxCount < r.maxCount || (r.exact && full.maxCount != r.maxCount);
        }
      }
      v.match = v.predicted.contains(v.observed) && !spotFailed;
      if (spotFailed) v.predicted.clauses.emplace_back("spot_check_failed");
      if (!v.match) {
        v.witness = witness;
        std::size_t cur = firstMismatch.load();
        while (i < cur && !firstMismatch.compare_exchange_weak(cur, i)) {
        }
      }
      verdicts[i] = std::move(v);
    });

    std::size_t emit = instances.size();
    if (options.failFast && firstMismatch.load() < instances.size()) {
      emit = firstMismatch.load() + 1;
      stopped = true;
    }
    ++summary.fieldsChecked;
    for (std::size_t i = 0; i < emit; ++i) {
      ++summary.instancesChecked;
      if (!verdicts[i].match) ++summary.mismatches;
      if (sink) sink(verdicts[i]);
    }
    globalIndex += instances.size();
  }

  summary.elapsedSeconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return summary;
}

}  // namespace cdiff
