#include "nekrasov/report.hpp"

#include <sstream>

#include "json.hpp"

namespace nekrasov {

namespace {

using Json = nlohmann::ordered_json;

Json point_json(const EvalPoint& p) {
  Json out = Json::object();
  for (const auto& [v, value] : p.values()) out[v.name()] = value.to_string();
  return out;
}

Json to_json(const VerificationReport& r) {
  Json out;
  out["check"] = r.check;
  out["w"] = {r.frame.w0(), r.frame.w1()};
  out["k"] = r.k.to_string();
  out["max_4n"] = r.max4n;
  out["seed"] = r.seed;
  out["trials"] = r.trials;
  out["points"] = Json::array();
  for (const auto& p : r.points) out["points"].push_back(point_json(p));
  out["grades"] = Json::array();
  for (const auto& g : r.grades) {
    Json grade;
    grade["grade4n"] = g.grade4n;
    grade["trials"] = Json::array();
    for (const auto& t : g.trials) {
      grade["trials"].push_back(
          Json{{"lhs", t.lhs.to_string()}, {"rhs", t.rhs.to_string()}, {"equal", t.equal}});
    }
    out["grades"].push_back(std::move(grade));
  }
  out["pass"] = r.pass;
  return out;
}

std::vector<SampledPoint> series_points(const QSeries& series, int rank, const SampleConfig& cfg) {
  const auto poles = series.pole_forms();
  std::vector<SampledPoint> out;
  for (int t = 0; t < cfg.trials; ++t) out.push_back(sample_point(cfg, t, rank, poles));
  return out;
}

std::string frame_label(const FrameData& frame, HalfInt k) {
  return "w=(" + std::to_string(frame.w0()) + "," + std::to_string(frame.w1()) +
         ") k=" + k.to_string();
}

}  // namespace

std::string report_json(const VerificationReport& report) { return to_json(report).dump(2); }

std::string reports_json(const std::vector<VerificationReport>& reports) {
  Json out = Json::array();
  for (const auto& r : reports) out.push_back(to_json(r));
  return out.dump(2);
}

std::string report_text(const VerificationReport& r) {
  std::ostringstream out;
  out << (r.pass ? "PASS " : "FAIL ") << r.check << ' ' << frame_label(r.frame, r.k)
      << " max_4n=" << r.max4n << " trials=" << r.trials << " grades=" << r.grades.size();
  int resamples = 0;
  for (int n : r.resamples) resamples += n;
  if (resamples > 0) out << " resamples=" << resamples;
  out << '\n';
  for (const auto& g : r.grades) {
    for (std::size_t t = 0; t < g.trials.size(); ++t) {
      const auto& rec = g.trials[t];
      if (rec.equal) continue;
      out << "  grade4n=" << g.grade4n << " trial=" << t << " lhs=" << rec.lhs.to_string()
          << " rhs=" << rec.rhs.to_string() << '\n';
    }
  }
  return out.str();
}

std::string series_json(const std::string& name, const FrameData& frame, HalfInt k,
                        const QSeries& series, const SampleConfig& cfg) {
  const auto points = series_points(series, frame.rank(), cfg);
  Json out;
  out["series"] = name;
  out["w"] = {frame.w0(), frame.w1()};
  out["k"] = k.to_string();
  out["max_4n"] = series.max_grade();
  out["seed"] = cfg.seed;
  out["trials"] = cfg.trials;
  out["points"] = Json::array();
  for (const auto& p : points) out["points"].push_back(point_json(p.point));
  out["grades"] = Json::array();
  for (long g : series.grades()) {
    Json grade;
    grade["grade4n"] = g;
    grade["n"] = Rational(g, 4).to_string();
    grade["terms"] = series.coefficient(g).terms().size();
    grade["values"] = Json::array();
    for (const auto& p : points) grade["values"].push_back(series.evaluate(g, p.point).to_string());
    out["grades"].push_back(std::move(grade));
  }
  return out.dump(2);
}

std::string series_text(const std::string& name, const FrameData& frame, HalfInt k,
                        const QSeries& series, const SampleConfig& cfg) {
  const auto points = series_points(series, frame.rank(), cfg);
  std::ostringstream out;
  out << name << ' ' << frame_label(frame, k) << " max_4n=" << series.max_grade() << '\n';
  for (long g : series.grades()) {
    out << "grade4n=" << g << " n=" << Rational(g, 4).to_string()
        << " terms=" << series.coefficient(g).terms().size();
    for (const auto& p : points) out << ' ' << series.evaluate(g, p.point).to_string();
    out << '\n';
  }
  return out.str();
}

}  // namespace nekrasov
