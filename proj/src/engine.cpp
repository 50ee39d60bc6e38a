#include "cdiff/engine.hpp"

#include <algorithm>
#include <atomic>

#include "cdiff/parallel.hpp"

namespace cdiff {

namespace {

// Precomputed state for all rows of one c.
class RowKernel {
 public:
  RowKernel(const FuncTable& f, Elem c) : field_(f.field()), q_(field_.q()), images_(q_), negCF_(q_) {
    for (std::uint32_t x = 0; x < q_; ++x) {
      images_[x] = f.images()[x].index();
      negCF_[x] = field_.neg(field_.mul(c, f.images()[x])).index();
    }
    const auto row0 = field_.addRow(field_.zero());
    addTable_ = row0.empty() ? nullptr : row0.data();
  }

  // Fills acc (zeroed, length q) with the row for a. With stopAt != 0 the scan
  // returns the first b whose count reaches stopAt.
  std::optional<std::uint32_t> fill(Elem a, std::vector<std::uint32_t>& acc, std::uint32_t stopAt) const {
    if (addTable_ != nullptr) {
      const std::uint16_t* shift = addTable_ + static_cast<std::size_t>(a.index()) * q_;
      for (std::uint32_t x = 0; x < q_; ++x) {
        const std::uint32_t b = addTable_[static_cast<std::size_t>(images_[shift[x]]) * q_ + negCF_[x]];
        if (++acc[b] == stopAt) return b;
      }
    } else {
      for (std::uint32_t x = 0; x < q_; ++x) {
        const Elem xa = field_.add(Elem{x}, a);
        const std::uint32_t b = field_.add(Elem{images_[xa.index()]}, Elem{negCF_[x]}).index();
        if (++acc[b] == stopAt) return b;
      }
    }
    return std::nullopt;
  }

 private:
  const Field& field_;
  std::uint32_t q_;
  std::vector<std::uint32_t> images_;
  std::vector<std::uint32_t> negCF_;
  const std::uint16_t* addTable_ = nullptr;
};

struct RowSummary {
  std::uint32_t max = 0;
  std::vector<std::uint32_t> argmax;  // first witnessCap b with count == max
};

}  // namespace

std::string PcnClass::toString() const {
  switch (kind) {
    case Kind::PcN:
      return "PcN";
    case Kind::APcN:
      return "APcN";
    case Kind::Neither:
      break;
  }
  return "neither(" + std::to_string(maxCount) + ")";
}

std::uint32_t cdiffCount(const FuncTable& f, Elem c, Elem a, Elem b) {
  const Field& k = f.field();
  std::uint32_t count = 0;
  for (const Elem x : k.elements()) {
    if (k.sub(f(k.add(x, a)), k.mul(c, f(x))) == b) ++count;
  }
  return count;
}

std::vector<std::uint32_t> rowHistogram(const FuncTable& f, Elem c, Elem a) {
  const RowKernel kernel(f, c);
  std::vector<std::uint32_t> acc(f.field().q(), 0);
  kernel.fill(a, acc, 0);
  return acc;
}

SpectrumReport cUniformity(const FuncTable& f, Elem c, const EngineOptions& options) {
  const Field& k = f.field();
  const std::uint32_t q = k.q();
  const RowKernel kernel(f, c);
  const std::uint32_t firstA = (c == k.one()) ? 1 : 0;
  const std::size_t rows = q - firstA;
  const unsigned threads = std::min<unsigned>(resolveThreads(options.threads), static_cast<unsigned>(rows));

  SpectrumReport report;
  report.c = c;

  if (options.earlyExitAt != 0) {
    std::atomic<std::uint32_t> bestA{q};
    std::vector<std::uint32_t> hitB(q, 0);
    std::vector<std::vector<std::uint32_t>> accs(threads, std::vector<std::uint32_t>(q, 0));
    parallelFor(rows, threads, [&](std::size_t i, unsigned worker) {
      const auto a = static_cast<std::uint32_t>(firstA + i);
      if (a > bestA.load(std::memory_order_relaxed)) return;
      auto& acc = accs[worker];
      std::fill(acc.begin(), acc.end(), 0);
      if (const auto hit = kernel.fill(Elem{a}, acc, options.earlyExitAt)) {
        hitB[a] = *hit;
        std::uint32_t cur = bestA.load();
        while (a < cur && !bestA.compare_exchange_weak(cur, a)) {
        }
      }
    });
    const std::uint32_t a = bestA.load();
    if (a < q) {
      report.maxCount = options.earlyExitAt;
      report.witnesses.emplace_back(Elem{a}, Elem{hitB[a]});
      report.exact = false;
      return report;
    }
    // No row reached the threshold: fall through to the exact scan.
  }

  std::vector<RowSummary> summaries(rows);
  std::vector<std::map<std::uint32_t, std::uint64_t>> histograms(threads);
  std::vector<std::vector<std::uint32_t>> accs(threads, std::vector<std::uint32_t>(q, 0));
  parallelFor(rows, threads, [&](std::size_t i, unsigned worker) {
    auto& acc = accs[worker];
    std::fill(acc.begin(), acc.end(), 0);
    kernel.fill(Elem{static_cast<std::uint32_t>(firstA + i)}, acc, 0);
    RowSummary& s = summaries[i];
    auto& hist = histograms[worker];
    std::uint32_t prev = acc.empty() ? 0 : acc[0];
    std::uint64_t run = 0;
    for (std::uint32_t b = 0; b < q; ++b) {
      const std::uint32_t v = acc[b];
      if (v != prev) {
        hist[prev] += run;
        prev = v;
        run = 0;
      }
      ++run;
      if (v > s.max) {
        s.max = v;
        s.argmax.clear();
      }
      if (v == s.max && s.argmax.size() < options.witnessCap) s.argmax.push_back(b);
    }
    hist[prev] += run;
  });

  for (const auto& s : summaries) report.maxCount = std::max(report.maxCount, s.max);
  for (std::size_t i = 0; i < rows && report.witnesses.size() < options.witnessCap; ++i) {
    if (summaries[i].max != report.maxCount) continue;
    for (const auto b : summaries[i].argmax) {
      if (report.witnesses.size() >= options.witnessCap) break;
      report.witnesses.emplace_back(Elem{static_cast<std::uint32_t>(firstA + i)}, Elem{b});
    }
  }
  for (const auto& hist : histograms) {
    for (const auto& [count, freq] : hist) report.histogram[count] += freq;
  }
  return report;
}

std::vector<SpectrumReport> fullCSweep(const FuncTable& f, CFilter filter, const EngineOptions& options) {
  std::vector<SpectrumReport> out;
  const std::uint32_t first = filter == CFilter::All ? 0 : (filter == CFilter::Exclude0 ? 1 : 2);
  for (std::uint32_t c = first; c < f.field().q(); ++c) out.push_back(cUniformity(f, Elem{c}, options));
  return out;
}

PcnClass classifyPcn(const SpectrumReport& report) {
  if (report.maxCount == 1) return {PcnClass::Kind::PcN, 1};
  if (report.maxCount == 2) return {PcnClass::Kind::APcN, 2};
  return {PcnClass::Kind::Neither, report.maxCount};
}

FuncTable familyTable(const FieldPtr& field, const Family& family) {
  if (family.kind == Family::Kind::Swap01) return swap01(field);
  if (!family.gamma) throw std::invalid_argument("swap1g family needs gamma");
  return swap1g(field, *family.gamma);
}

std::vector<Elem> paPoints(const Field& field, const Family& family, Elem a) {
  std::vector<Elem> base{field.zero(), field.one()};
  if (family.kind == Family::Kind::Swap1g) {
    if (!family.gamma) throw std::invalid_argument("swap1g family needs gamma");
    base.push_back(*family.gamma);
  }
  std::vector<Elem> pa = base;
  for (const Elem x : base) pa.push_back(field.sub(x, a));
  std::sort(pa.begin(), pa.end());
  pa.erase(std::unique(pa.begin(), pa.end()), pa.end());
  return pa;
}

CaseProbe paProbe(const FuncTable& f, const Family& family, Elem c, Elem a, Elem b) {
  const Field& k = f.field();
  if (family.kind == Family::Kind::Swap1g && family.gamma &&
      (*family.gamma == k.zero() || *family.gamma == k.one())) {
    throw std::invalid_argument("gamma must lie outside {0, 1}");
  }
  CaseProbe probe;
  probe.gamma = family.gamma;
  probe.c = c;
  probe.a = a;
  probe.b = b;
  probe.pa = paPoints(k, family, a);
  probe.degenerate = a.isZero();
  for (const Elem x : probe.pa) {
    if (k.sub(f(k.add(x, a)), k.mul(c, f(x))) == b) ++probe.countInPa;
  }
  probe.countOutsidePa = cdiffCount(f, c, a, b) - probe.countInPa;
  return probe;
}

CaseProbe paProbe(const FieldPtr& field, const Family& family, Elem c, Elem a, Elem b) {
  return paProbe(familyTable(field, family), family, c, a, b);
}

}  // namespace cdiff
