#include "cli.hpp"

#include <cstdlib>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "nekrasov/errors.hpp"
#include "nekrasov/report.hpp"
#include "nekrasov/series.hpp"
#include "nekrasov/verifier.hpp"
#include "nekrasov/walls.hpp"

namespace nekrasov::cli {

namespace {

struct SeriesArgs {
  int w0 = 1;
  int w1 = 0;
  std::string k = "0";
  long max_n = 2;
  bool json = false;
  std::uint64_t seed = 161;
  int trials = 5;
  int threads = 1;
};

void add_series_flags(CLI::App* cmd, SeriesArgs& a) {
  cmd->add_option("--w0", a.w0, "colour-0 framing")->required();
  cmd->add_option("--w1", a.w1, "colour-1 framing")->required();
  cmd->add_option("--k", a.k, "first Chern class, p or p/2");
  cmd->add_option("--max-n", a.max_n, "levels above the base grade")->check(CLI::NonNegativeNumber);
  cmd->add_flag("--json", a.json, "machine-readable output");
  cmd->add_option("--seed", a.seed, "sampling seed");
  cmd->add_option("--trials", a.trials, "sample points")->check(CLI::PositiveNumber);
  cmd->add_option("--threads", a.threads, "worker threads")->check(CLI::PositiveNumber);
}

int effective_threads(int requested) {
  if (const char* env = std::getenv("NEKRASOV_THREADS")) {
    try {
      const int n = std::stoi(env);
      if (n > 0) return n;
    } catch (const std::exception&) {
    }
  }
  return requested;
}

SampleConfig sample_config(const SeriesArgs& a) {
  SampleConfig cfg;
  cfg.seed = a.seed;
  cfg.trials = a.trials;
  return cfg;
}

std::vector<Rational> parse_list(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(Rational::parse(item));
  return out;
}

int run_compute(const std::string& what, const SeriesArgs& a, std::ostream& out) {
  const FrameData frame(a.w0, a.w1);
  const HalfInt k = HalfInt::parse(a.k);
  const long max4n = 4 * a.max_n + a.w1;
  const int threads = effective_threads(a.threads);
  const SeriesOptions opts{SubstitutionRule::identity(), threads};
  QSeries series(0, 0);
  if (what == "zx0") {
    series = series_Z_X0(frame, k, max4n, opts);
  } else if (what == "zx1") {
    series = series_Z_X1(frame, k, max4n, opts);
  } else if (what == "zp2") {
    series = series_Z_P2(frame.rank(), a.max_n, opts);
  } else {
    series = series_Z_X1_factorized(frame, k, max4n, threads);
  }
  const SampleConfig cfg = sample_config(a);
  out << (a.json ? series_json(what, frame, k, series, cfg) + "\n"
                 : series_text(what, frame, k, series, cfg));
  return kPass;
}

int run_check(const std::string& what, const SeriesArgs& a, std::ostream& out) {
  const FrameData frame(a.w0, a.w1);
  const HalfInt k = HalfInt::parse(a.k);
  const long max4n = 4 * a.max_n + a.w1;
  const int threads = effective_threads(a.threads);
  const SampleConfig cfg = sample_config(a);
  std::vector<VerificationReport> reports;
  auto append = [&](std::vector<VerificationReport> more) {
    for (auto& r : more) reports.push_back(std::move(r));
  };
  if (what == "main" || what == "all") append(check_main(frame, k, max4n, cfg, threads));
  if (what == "mult" || what == "all") reports.push_back(check_factorization(frame, k, max4n, cfg, threads));
  if (what == "symmetry" || what == "all") append(check_symmetry(frame, k, max4n, cfg, threads));
  if (what == "must") reports.push_back(check_recursion_must(frame, k, max4n, cfg, threads));
  bool pass = true;
  for (const auto& r : reports) pass = pass && r.pass;
  if (a.json) {
    out << reports_json(reports) << '\n';
  } else {
    for (const auto& r : reports) out << report_text(r);
  }
  return pass ? kPass : kVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Equivariant instanton partition functions on the A1 quotient, its resolution and the plane"};
  app.require_subcommand(1);

  SeriesArgs compute_args;
  std::string compute_what;
  auto* compute = app.add_subcommand("compute", "compute a partition function series");
  compute->add_option("series", compute_what, "zx0 | zx1 | zp2 | zx1-fact")
      ->required()
      ->check(CLI::IsMember({"zx0", "zx1", "zp2", "zx1-fact"}));
  add_series_flags(compute, compute_args);

  SeriesArgs check_args;
  std::string check_what;
  auto* check = app.add_subcommand("check", "verify an identity at random rational points");
  check->add_option("identity", check_what, "main | mult | symmetry | must | all")
      ->required()
      ->check(CLI::IsMember({"main", "mult", "symmetry", "must", "all"}));
  add_series_flags(check, check_args);

  int v0 = 0;
  int v1 = 0;
  bool walls_json = false;
  auto* walls = app.add_subcommand("walls", "list the positive roots bounded by (v0, v1)");
  walls->add_option("--v0", v0)->required()->check(CLI::NonNegativeNumber);
  walls->add_option("--v1", v1)->required()->check(CLI::NonNegativeNumber);
  walls->add_flag("--json", walls_json);

  std::string eps1;
  std::string eps2;
  std::string a_list;
  std::string m_list;
  std::string imo_k;
  auto* imo = app.add_subcommand("imo-point", "convert a point to the IMO conventions");
  imo->add_option("--eps1", eps1)->required();
  imo->add_option("--eps2", eps2)->required();
  imo->add_option("--a", a_list, "comma-separated a values")->required();
  imo->add_option("--m", m_list, "comma-separated m values, twice as many as a")->required();
  imo->add_option("--k", imo_k, "report the charge c = -k");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kUsage;
  }

  try {
    if (compute->parsed()) return run_compute(compute_what, compute_args, out);
    if (check->parsed()) return run_check(check_what, check_args, out);
    if (walls->parsed()) {
      const auto list = enum_walls(v0, v1);
      if (walls_json) {
        out << '[';
        for (std::size_t i = 0; i < list.size(); ++i) {
          const auto& w = list[i];
          out << (i ? "," : "") << "{\"root\":[" << w.alpha0 << ',' << w.alpha1 << "],\"kind\":\""
              << (w.kind == Wall::Kind::Real ? "real" : "imaginary") << "\",\"label\":" << w.label
              << '}';
        }
        out << "]\n";
      } else {
        for (const auto& w : list) out << w.to_string() << '\n';
      }
      return kPass;
    }
    const auto as = parse_list(a_list);
    const auto ms = parse_list(m_list);
    if (as.empty() || ms.size() != 2 * as.size()) {
      err << "--m needs exactly twice as many values as --a\n";
      return kUsage;
    }
    const int r = static_cast<int>(as.size());
    EvalPoint p;
    p.set(VarIndex::eps1(), Rational::parse(eps1));
    p.set(VarIndex::eps2(), Rational::parse(eps2));
    for (int i = 0; i < r; ++i) p.set(VarIndex::a(i), as[i]);
    for (int f = 0; f < 2 * r; ++f) p.set(VarIndex::m(f), ms[f]);
    const EvalPoint q = map_to_imo(p, FrameData(r, 0));
    out << "eps1=" << q.at(VarIndex::eps1()).to_string() << " eps2=" << q.at(VarIndex::eps2()).to_string();
    for (int i = 0; i < r; ++i) out << " a" << i + 1 << '=' << q.at(VarIndex::a(i)).to_string();
    for (int f = 0; f < 2 * r; ++f) out << " mu" << f + 1 << '=' << q.at(VarIndex::m(f)).to_string();
    if (!imo_k.empty()) out << " c=" << imo_charge(HalfInt::parse(imo_k)).to_string();
    out << '\n';
    return kPass;
  } catch (const ParityError& e) {
    err << "parity: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "usage: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
}

}  // namespace nekrasov::cli
