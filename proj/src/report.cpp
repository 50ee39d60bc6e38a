#include <fstream>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

#include "cdiff/verify.hpp"

namespace cdiff {

namespace {

using Json = nlohmann::ordered_json;

std::string kindName(Prediction::Kind k) {
  switch (k) {
    case Prediction::Kind::Exact:
      return "exact";
    case Prediction::Kind::Bounded:
      return "bounded";
    case Prediction::Kind::ExactOrBounded:
      return "exact_or_bounded";
  }
  return "bounded";
}

Prediction::Kind parseKind(const std::string& s) {
  if (s == "exact") return Prediction::Kind::Exact;
  if (s == "bounded") return Prediction::Kind::Bounded;
  if (s == "exact_or_bounded") return Prediction::Kind::ExactOrBounded;
  throw std::runtime_error("unknown prediction kind: " + s);
}

template <class T>
Json optionalJson(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

template <class T>
std::optional<T> optionalFrom(const Json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<T>();
}

Json toJson(const TheoremVerdict& v) {
  Json j;
  j["theorem_id"] = v.theoremId;
  j["p"] = v.p;
  j["n"] = v.n;
  j["q"] = v.q;
  j["gamma"] = optionalJson(v.gamma);
  j["c"] = optionalJson(v.c);
  j["a"] = optionalJson(v.a);
  j["b"] = optionalJson(v.b);
  j["predicted"] = {{"kind", kindName(v.predicted.kind)},
                    {"value", v.predicted.value},
                    {"lo", v.predicted.lo},
                    {"hi", v.predicted.hi},
                    {"clauses", v.predicted.clauses}};
  j["observed"] = v.observed;
  j["match"] = v.match;
  j["witness"] = v.witness ? Json::array({v.witness->first, v.witness->second}) : Json(nullptr);
  return j;
}

TheoremVerdict fromJson(const Json& j) {
  TheoremVerdict v;
  v.theoremId = j.at("theorem_id").get<std::string>();
  v.p = j.at("p").get<std::uint32_t>();
  v.n = j.at("n").get<std::uint32_t>();
  v.q = j.at("q").get<std::uint32_t>();
  v.gamma = optionalFrom<std::uint32_t>(j.at("gamma"));
  v.c = optionalFrom<std::uint32_t>(j.at("c"));
  v.a = optionalFrom<std::uint32_t>(j.at("a"));
  v.b = optionalFrom<std::uint32_t>(j.at("b"));
  const Json& pr = j.at("predicted");
  v.predicted.kind = parseKind(pr.at("kind").get<std::string>());
  v.predicted.value = pr.at("value").get<std::uint32_t>();
  v.predicted.lo = pr.at("lo").get<std::uint32_t>();
  v.predicted.hi = pr.at("hi").get<std::uint32_t>();
  v.predicted.clauses = pr.at("clauses").get<std::vector<std::string>>();
  v.observed = j.at("observed").get<std::uint32_t>();
  v.match = j.at("match").get<bool>();
  const Json& w = j.at("witness");
  if (!w.is_null()) v.witness = std::make_pair(w.at(0).get<std::uint32_t>(), w.at(1).get<std::uint32_t>());
  return v;
}

template <class T>
std::string optionalText(const std::optional<T>& v) {
  return v ? std::to_string(*v) : std::string{};
}

}  // namespace

ReportWriter::ReportWriter(std::ostream& out, ReportFormat format) : out_(out), format_(format) {
  if (format_ == ReportFormat::Csv) {
    out_ << kCsvHeader << '\n';
  } else {
    out_ << "[";
  }
}

ReportWriter::~ReportWriter() {
  try {
    finish();
  } catch (...) {
  }
}

void ReportWriter::write(const TheoremVerdict& v) {
  if (finished_) throw std::logic_error("report already finished");
  if (format_ == ReportFormat::Json) {
    out_ << (first_ ? "\n" : ",\n") << toJson(v).dump();
  } else {
    std::string clauses;
    for (std::size_t i = 0; i < v.predicted.clauses.size(); ++i) {
      if (i) clauses += ';';
      clauses += v.predicted.clauses[i];
    }
    out_ << v.theoremId << ',' << v.p << ',' << v.n << ',' << v.q << ',' << optionalText(v.gamma) << ','
         << optionalText(v.c) << ',' << v.predicted.rangeLo() << ',' << v.predicted.rangeHi() << ',' << v.observed
         << ',' << (v.match ? "true" : "false") << ','
         << (v.witness ? std::to_string(v.witness->first) : std::string{}) << ','
         << (v.witness ? std::to_string(v.witness->second) : std::string{}) << ',' << clauses << '\n';
  }
  first_ = false;
}

void ReportWriter::finish() {
  if (finished_) return;
  finished_ = true;
  if (format_ == ReportFormat::Json) out_ << (first_ ? "]\n" : "\n]\n");
  out_.flush();
}

void writeReport(const std::vector<TheoremVerdict>& verdicts, ReportFormat format, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path);
  ReportWriter writer(out, format);
  for (const auto& v : verdicts) writer.write(v);
  writer.finish();
}

std::vector<TheoremVerdict> readJsonReport(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  const Json j = Json::parse(in);
  std::vector<TheoremVerdict> out;
  for (const auto& item : j) out.push_back(fromJson(item));
  return out;
}

}  // namespace cdiff
