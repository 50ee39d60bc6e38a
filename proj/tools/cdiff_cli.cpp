// Command-line front end: field summaries, spectra, theorem sweeps and the
// invariant suites.
//
// Element flags (--gamma, --c, --a, --b) take prime-subfield rationals such as
// "-1", "3" or "-1/2". With --raw-index they take element indices instead, and
// a negative index v means q - |v|.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>
#include <string>

#include "cdiff/engine.hpp"
#include "cdiff/field.hpp"
#include "cdiff/func_table.hpp"
#include "cdiff/verify.hpp"

namespace {

using namespace cdiff;

constexpr int kPass = 0;
constexpr int kMismatch = 1;
constexpr int kUsage = 2;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::int64_t parseInt(const std::string& text) {
  std::size_t used = 0;
  const long long v = std::stoll(text, &used);
  if (used != text.size()) throw UsageError("not an integer: " + text);
  return v;
}

Elem parseElement(const Field& k, const std::string& text, bool rawIndex) {
  try {
    if (rawIndex) {
      std::int64_t v = parseInt(text);
      if (v < 0) v += k.q();
      if (v < 0 || v >= static_cast<std::int64_t>(k.q())) throw UsageError("index out of range: " + text);
      return Elem{static_cast<std::uint32_t>(v)};
    }
    static const std::regex rational(R"(\s*([+-]?\d+)\s*(?:/\s*([+-]?\d+)\s*)?)");
    std::smatch m;
    if (!std::regex_match(text, m, rational)) throw UsageError("not a rational: " + text);
    const Elem num = k.fromInt(parseInt(m[1]));
    if (!m[2].matched) return num;
    const Elem den = k.fromInt(parseInt(m[2]));
    if (den == k.zero()) throw UsageError("denominator vanishes mod p: " + text);
    return k.div(num, den);
  } catch (const std::out_of_range&) {
    throw UsageError("value out of range: " + text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

std::string modulusText(const Field& k) {
  const auto& m = k.modulus();
  std::string out;
  for (std::size_t i = m.size(); i-- > 0;) {
    if (m[i] == 0) continue;
    std::string term;
    if (i == 0 || m[i] != 1) term = std::to_string(m[i]);
    if (i >= 1) term += "x";
    if (i >= 2) term += "^" + std::to_string(i);
    out += (out.empty() ? "" : " + ") + term;
  }
  return out;
}

struct FieldArgs {
  std::uint32_t p = 0;
  std::uint32_t n = 1;
  std::uint32_t maxOrder = 1u << 16;
};

FieldPtr buildField(const FieldArgs& args) {
  FieldOptions opts;
  opts.orderCap = args.maxOrder;
  return makeField(args.p, args.n, opts);
}

int cmdField(const FieldArgs& args) {
  const FieldPtr k = buildField(args);
  std::cout << "p: " << k->p() << "\nn: " << k->n() << "\nq: " << k->q() << "\nmodulus: " << modulusText(*k)
            << "\nchi:";
  const std::uint32_t shown = std::min<std::uint32_t>(k->q(), 16);
  for (std::uint32_t i = 0; i < shown; ++i) std::cout << ' ' << k->chi(Elem{i});
  std::cout << (shown < k->q() ? " ...\n" : "\n");
  return kPass;
}

struct FamilyArgs {
  std::string family = "inv";
  std::optional<std::string> gamma;
};

FuncTable buildTable(const FieldArgs& fargs, const FamilyArgs& args, bool rawIndex) {
  const std::string tablePrefix = "table:";
  if (args.family.rfind(tablePrefix, 0) == 0) {
    FieldOptions opts;
    opts.orderCap = fargs.maxOrder;
    return loadTable(args.family.substr(tablePrefix.size()), opts);
  }
  const FieldPtr k = buildField(fargs);
  if (args.family == "inv") return inverseTable(k);
  if (args.family == "swap01") return swap01(k);
  if (args.family == "swap1g") {
    if (!args.gamma) throw UsageError("--family swap1g needs --gamma");
    return swap1g(k, parseElement(*k, *args.gamma, rawIndex));
  }
  throw UsageError("unknown family: " + args.family);
}

struct SpectrumArgs {
  FieldArgs field;
  FamilyArgs family;
  std::optional<std::string> c;
  std::optional<std::string> cExpr;
  std::optional<std::string> a;
  std::optional<std::string> b;
  bool rawIndex = false;
  unsigned threads = 0;
};

int cmdSpectrum(const SpectrumArgs& args) {
  const FuncTable f = buildTable(args.field, args.family, args.rawIndex);
  const Field& k = f.field();
  Elem c;
  if (args.cExpr) {
    c = parseElement(k, *args.cExpr, false);
  } else if (args.c) {
    c = parseElement(k, *args.c, args.rawIndex);
  } else {
    throw UsageError("spectrum needs --c or --c-expr");
  }

  if (args.a || args.b) {
    if (!args.a || !args.b) throw UsageError("--a and --b go together");
    const Elem a = parseElement(k, *args.a, args.rawIndex);
    const Elem b = parseElement(k, *args.b, args.rawIndex);
    std::cout << "count: " << cdiffCount(f, c, a, b) << "\n";
    return kPass;
  }

  EngineOptions opts;
  opts.threads = args.threads;
  const SpectrumReport r = cUniformity(f, c, opts);
  std::cout << "q: " << k.q() << "\nc: " << c.index() << "\nmax: " << r.maxCount
            << "\nclass: " << classifyPcn(r).toString() << "\nwitnesses:";
  for (const auto& [a, b] : r.witnesses) std::cout << " (" << a.index() << "," << b.index() << ")";
  std::cout << "\nhistogram:\n";
  for (const auto& [count, pairs] : r.histogram) std::cout << "  " << count << ": " << pairs << "\n";
  return kPass;
}

struct TableArgs {
  FieldArgs field;
  FamilyArgs family;
  bool rawIndex = false;
  std::string out;
};

int cmdTable(const TableArgs& args) {
  const FuncTable f = buildTable(args.field, args.family, args.rawIndex);
  if (args.out.empty() || args.out == "-") {
    writeTable(std::cout, f);
  } else {
    saveTable(args.out, f);
  }
  return kPass;
}

struct VerifyArgs {
  std::string theorem;
  std::string tier = "ci";
  std::optional<std::uint32_t> qMin;
  std::optional<std::uint32_t> qMax;
  std::string format = "csv";
  std::string out;
  unsigned threads = 0;
  std::uint32_t maxOrder = 4096;
  bool force = false;
  bool failFast = false;
};

int cmdVerify(const VerifyArgs& args) {
  std::vector<TheoremId> ids;
  if (args.theorem == "all") {
    ids = allTheorems();
  } else if (const auto id = parseTheorem(args.theorem)) {
    ids.push_back(*id);
  } else {
    throw UsageError("unknown theorem: " + args.theorem);
  }
  const Tier tier = args.tier == "full" ? Tier::Full : Tier::Ci;
  const ReportFormat format = args.format == "json" ? ReportFormat::Json : ReportFormat::Csv;

  std::ofstream file;
  std::optional<ReportWriter> writer;
  if (!args.out.empty()) {
    file.open(args.out);
    if (!file) throw std::runtime_error("cannot open " + args.out);
    writer.emplace(file, format);
  }

  std::uint64_t mismatches = 0;
  for (const TheoremId id : ids) {
    SweepOptions opts;
    opts.range = tierRange(id, tier);
    if (args.qMin) opts.range.qMin = *args.qMin;
    if (args.qMax) {
      opts.range.qMax = *args.qMax;
      opts.range.extraFields.clear();
    }
    opts.threads = args.threads;
    opts.sweepCap = args.maxOrder;
    opts.force = args.force;
    opts.failFast = args.failFast;
    const SweepSummary s = sweep(id, opts, [&](const TheoremVerdict& v) {
      if (writer) writer->write(v);
      if (!v.match) {
        std::cerr << "mismatch " << v.theoremId << " q=" << v.q;
        if (v.gamma) std::cerr << " gamma=" << *v.gamma;
        if (v.c) std::cerr << " c=" << *v.c;
        std::cerr << " predicted " << v.predicted.describe() << " observed " << v.observed << "\n";
      }
    });
    std::cout << s.theoremId << ": fields=" << s.fieldsChecked << " instances=" << s.instancesChecked
              << " mismatches=" << s.mismatches << " elapsed=" << s.elapsedSeconds << "s config=" << s.configHash
              << "\n";
    mismatches += s.mismatches;
    if (args.failFast && s.mismatches) break;
  }
  if (writer) writer->finish();
  return mismatches == 0 ? kPass : kMismatch;
}

int printSuite(const std::string& name, const SuiteReport& r) {
  std::cout << name << ": " << (r.passed ? "pass" : "fail") << " (" << r.checks << " checks)\n";
  for (const auto& f : r.failures) std::cout << "  " << f << "\n";
  return r.passed ? kPass : kMismatch;
}

void addFieldFlags(CLI::App* cmd, FieldArgs& f, bool required) {
  auto* p = cmd->add_option("--p", f.p, "field characteristic (odd prime)");
  if (required) p->required();
  cmd->add_option("--n", f.n, "extension degree")->capture_default_str();
  cmd->add_option("--max-order", f.maxOrder, "largest field order accepted")->capture_default_str();
}

void addFamilyFlags(CLI::App* cmd, FamilyArgs& f) {
  cmd->add_option("--family", f.family, "inv, swap01, swap1g or table:<path>")->capture_default_str();
  cmd->add_option("--gamma", f.gamma, "gamma for swap1g");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"c-differential uniformity of swapped inverse functions"};
  app.require_subcommand(1);

  FieldArgs fieldArgs;
  auto* field = app.add_subcommand("field", "print a field summary");
  addFieldFlags(field, fieldArgs, true);

  SpectrumArgs spec;
  auto* spectrum = app.add_subcommand("spectrum", "c-differential spectrum of one function");
  addFieldFlags(spectrum, spec.field, false);
  addFamilyFlags(spectrum, spec.family);
  spectrum->add_option("--c", spec.c, "multiplier c");
  spectrum->add_option("--c-expr", spec.cExpr, "c as a prime-subfield rational, e.g. -1/2");
  spectrum->add_option("--a", spec.a, "shift a (with --b: print one count)");
  spectrum->add_option("--b", spec.b, "target b");
  spectrum->add_flag("--raw-index", spec.rawIndex, "element flags are indices");
  spectrum->add_option("--threads", spec.threads, "worker threads, 0 for all cores");

  TableArgs table;
  auto* tableCmd = app.add_subcommand("table", "write a function table");
  addFieldFlags(tableCmd, table.field, false);
  addFamilyFlags(tableCmd, table.family);
  tableCmd->add_flag("--raw-index", table.rawIndex, "element flags are indices");
  tableCmd->add_option("--out", table.out, "output path, - for stdout");

  VerifyArgs ver;
  auto* verify = app.add_subcommand("verify", "sweep a theorem against brute force");
  verify->add_option("--theorem", ver.theorem, "theorem id or all")->required();
  verify->add_option("--tier", ver.tier, "ci or full")->check(CLI::IsMember({"ci", "full"}))->capture_default_str();
  verify->add_option("--qmin", ver.qMin, "exclusive lower bound on q");
  verify->add_option("--qmax", ver.qMax, "inclusive upper bound on q");
  verify->add_option("--format", ver.format, "csv or json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  verify->add_option("--out", ver.out, "report path");
  verify->add_option("--threads", ver.threads, "worker threads, 0 for all cores");
  verify->add_option("--max-order", ver.maxOrder, "largest q swept without --force")->capture_default_str();
  verify->add_flag("--force", ver.force, "allow ranges beyond --max-order");
  verify->add_flag("--fail-fast", ver.failFast, "stop at the first mismatch");

  std::uint64_t seed = 0;
  std::uint32_t trials = 1000;
  auto* properties = app.add_subcommand("properties", "randomized engine invariants");
  properties->add_option("--seed", seed, "RNG seed")->capture_default_str();
  properties->add_option("--trials", trials, "random instances")->capture_default_str();

  auto* appendix = app.add_subcommand("appendix", "exception-set case checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kPass : kUsage;
  }

  try {
    if (field->parsed()) return cmdField(fieldArgs);
    if (spectrum->parsed()) return cmdSpectrum(spec);
    if (tableCmd->parsed()) return cmdTable(table);
    if (verify->parsed()) return cmdVerify(ver);
    if (properties->parsed()) return printSuite("properties", propertySuite(seed, trials));
    if (appendix->parsed()) return printSuite("appendix", appendixSuite());
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n" << app.help();
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
