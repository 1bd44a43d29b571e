// Copyright 2026 The doflab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DOFLAB_CLI_HPP
#define DOFLAB_CLI_HPP

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "doflab/execute.hpp"
#include "doflab/polytope.hpp"
#include "doflab/rate.hpp"
#include "doflab/regions.hpp"
#include "doflab/scheme.hpp"
#include "doflab/serialize.hpp"
#include "doflab/svg.hpp"
#include "doflab/three_user.hpp"

namespace doflab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitVerification = 2;
inline constexpr std::uint64_t kDefaultSeed = 1;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct RunConfig {
  std::string command;
  std::string model = "two-user";
  std::string M;
  std::string N;
  std::size_t trials = 100;
  std::optional<std::uint64_t> seed;
  std::string snr_db = "30,35,40,45,50,55,60";
  std::string d3 = "0";
  std::string target;
  std::string out;
  std::string format = "csv";
  std::string transcript;
};

inline std::vector<int> parse_int_list(const std::string& text, const char* flag) {
  std::vector<int> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const int x = std::stoi(item, &used);
      if (used != item.size() || x < 1) throw std::invalid_argument(item);
      v.push_back(x);
    } catch (const std::exception&) {
      throw UsageError(std::string(flag) + ": expected positive integers, got '" + item + "'");
    }
  }
  if (v.empty()) throw UsageError(std::string(flag) + " is required");
  return v;
}

inline int parse_single(const std::string& text, const char* flag) {
  const auto v = parse_int_list(text, flag);
  if (v.size() != 1) throw UsageError(std::string(flag) + ": expected a single value");
  return v.front();
}

inline std::vector<double> parse_double_list(const std::string& text, const char* flag) {
  std::vector<double> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      v.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError(std::string(flag) + ": expected numbers, got '" + item + "'");
    }
  }
  return v;
}

inline Rational parse_rational(const std::string& text, const char* flag) {
  try {
    return Rational::parse(text);
  } catch (const std::exception&) {
    throw UsageError(std::string(flag) + ": expected p/q, got '" + text + "'");
  }
}

inline std::uint64_t resolve_seed(const RunConfig& cfg) {
  if (cfg.seed) return *cfg.seed;
  if (const char* env = std::getenv("DOFLAB_SEED")) {
    try {
      std::size_t used = 0;
      const std::string s(env);
      const auto v = std::stoull(s, &used);
      if (used == s.size()) return v;
    } catch (const std::exception&) {
    }
    throw UsageError(std::string("DOFLAB_SEED: expected an unsigned integer, got '") + env + "'");
  }
  return kDefaultSeed;
}

// Three-user commands accept "--N 2" or "--N 2,2,2".
inline int symmetric_N(const std::vector<int>& n) {
  if (n.size() != 1 && n.size() != 3) throw UsageError("--N: three-user model needs one value or three equal values");
  if (std::adjacent_find(n.begin(), n.end(), std::not_equal_to<>()) != n.end())
    throw UsageError("--N: three-user model needs equal receive antenna counts");
  return n.front();
}

inline void write_artifact(const RunConfig& cfg, const std::string& body, std::ostream& out) {
  if (cfg.out.empty()) {
    out << body;
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + cfg.out + " for writing");
  f << body;
  out << "wrote " << cfg.out << "\n";
}

inline std::string point_text(const RationalVector& p) { return "(" + to_string(p, ",") + ")"; }

inline std::string format_double(double x) {
  std::ostringstream os;
  os << std::setprecision(3) << std::scientific << x;
  return os.str();
}

// ---------------------------------------------------------------- region

inline svg::Figure two_user_figure(int M, int N1, int N2, const std::vector<RationalVector>& vertices) {
  svg::Figure fig;
  fig.extent = std::min(M, N1 + N2);
  fig.title = "M=" + std::to_string(M) + ", N=(" + std::to_string(N1) + "," + std::to_string(N2) + ")";
  fig.polygons.push_back({vertices, fig.title});
  const int me = std::min(M, N1 + N2);
  fig.lines.push_back({Rational(1, me), Rational(1, std::min(M, N2)), Rational(1), "L1"});
  fig.lines.push_back({Rational(1, std::min(M, N1)), Rational(1, me), Rational(1), "L2"});
  const auto q = point_Q(M, N1, N2);
  if (q.point) fig.markers.push_back({*q.point, "Q " + point_text(*q.point)});
  return fig;
}

inline int cmd_region(const RunConfig& cfg, std::ostream& out) {
  const int M = parse_single(cfg.M, "--M");
  const auto n = parse_int_list(cfg.N, "--N");
  AntennaConfig config;
  DoFRegion region(1, {HalfSpace({1}, 1)});
  if (cfg.model == "outer") {
    config = AntennaConfig(M, n);
    region = outer_bound_region(config);
  } else if (cfg.model == "two-user") {
    if (n.size() != 2) throw UsageError("--N: two-user model needs exactly two values");
    config = AntennaConfig(M, n);
    region = two_user_region(M, n[0], n[1]);
  } else if (cfg.model == "three-user") {
    const int N = symmetric_N(n);
    config = AntennaConfig(M, {N, N, N});
    region = three_user_region(M, N);
  } else {
    throw UsageError("--model must be outer, two-user or three-user");
  }

  std::optional<std::vector<RationalVector>> vertices;
  if (region.dimension() <= 4) vertices = vertex_enumerate(region);

  out << "inequalities (" << region.halfspaces().size() << ", plus d >= 0):\n";
  for (const auto& h : region.halfspaces()) out << "  " << to_string(h) << "\n";

  if (cfg.format == "json") {
    write_artifact(cfg, region_document(config, region, vertices).dump(2) + "\n", out);
  } else if (cfg.format == "svg") {
    if (region.dimension() != 2) throw UsageError("--format svg needs a two-user region");
    write_artifact(cfg, svg::render(two_user_figure(M, n[0], n[1], *vertices)), out);
  } else {
    if (!cfg.out.empty()) {
      std::string hs_path = cfg.out;
      const auto dot = hs_path.rfind(".csv");
      hs_path = (dot == std::string::npos ? hs_path : hs_path.substr(0, dot)) + "_halfspaces.csv";
      std::ofstream(hs_path, std::ios::binary) << halfspaces_csv(region);
      out << "wrote " << hs_path << "\n";
    }
    if (vertices) {
      if (cfg.out.empty()) out << "vertices:\n";
      write_artifact(cfg, points_csv(region.dimension(), *vertices), out);
    } else {
      out << "vertices: not enumerated for K > 4\n";
    }
  }
  return kExitOk;
}

// ---------------------------------------------------------------- compare

inline int cmd_compare(const RunConfig& cfg, std::ostream& out) {
  const auto n = parse_int_list(cfg.N, "--N");
  if (n.size() != 2) throw UsageError("compare needs --N with exactly two values");
  std::vector<int> ms;
  if (cfg.M.empty())
    for (int m = 1; m <= n[0] + n[1] + 1; ++m) ms.push_back(m);
  else
    ms = parse_int_list(cfg.M, "--M");

  static const char* palette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b", "#e377c2"};
  svg::Figure fig;
  fig.title = "N=(" + std::to_string(n[0]) + "," + std::to_string(n[1]) + ")";
  std::string csv = "M,d1,d2\n";
  Json docs = Json::array();

  out << "M,sum_dof_perfect,sum_dof_none,sum_dof_delayed\n";
  std::optional<DoFRegion> previous;
  std::vector<std::string> notes;
  for (std::size_t i = 0; i < ms.size(); ++i) {
    const int M = ms[i];
    const AntennaConfig config(M, n);
    const DoFRegion region = two_user_region(M, n[0], n[1]);
    const auto vertices = vertex_enumerate(region);
    const Rational delayed = lp_max(region, all_ones(2));
    out << M << "," << benchmark_sum_dof(config, Csit::perfect).str() << ","
        << benchmark_sum_dof(config, Csit::none).str() << "," << delayed.str() << "\n";
    if (previous && i > 0 && regions_equal(*previous, region))
      notes.push_back("region(M=" + std::to_string(M) + ") = region(M=" + std::to_string(ms[i - 1]) + ")");
    previous = region;

    for (const auto& v : vertices) csv += std::to_string(M) + "," + to_string(v, ",") + "\n";
    docs.push_back(region_document(config, region, vertices));
    fig.extent = std::max(fig.extent, static_cast<double>(std::min(M, n[0] + n[1])));
    fig.polygons.push_back({vertices, "M=" + std::to_string(M), palette[i % std::size(palette)]});
  }
  for (const auto& s : notes) out << s << "\n";

  if (cfg.format == "json")
    write_artifact(cfg, docs.dump(2) + "\n", out);
  else if (cfg.format == "svg")
    write_artifact(cfg, svg::render(fig), out);
  else if (!cfg.out.empty())
    write_artifact(cfg, csv, out);
  return kExitOk;
}

// ---------------------------------------------------------------- simulate

inline void report_failures(const TrialsSummary& s, std::ostream& err) {
  for (const auto& f : s.failure_log)
    err << "trial " << f.trial << " sub_seed " << f.sub_seed << " slot " << f.slot << " user " << f.user << ": "
        << f.message << "\n";
}

inline int simulate_two_user(const RunConfig& cfg, int M, int N1, int N2, std::uint64_t seed, std::ostream& out,
                             std::ostream& err) {
  const SchemeSpec spec = plan_two_user(M, N1, N2);
  const auto summary = simulate_trials(spec, cfg.trials, seed);
  const auto q = point_Q(M, N1, N2);

  const auto& t = spec.phase_lengths;
  out << "case " << case_letter(spec.which);
  if (spec.which == TwoUserCase::A)
    out << ": time division, " << t[0] << " + " << t[1] << " slots\n";
  else
    out << ": phases (" << t[0] << "," << t[1] << "," << t[2] << "), " << spec.total_slots() << " slots\n";
  out << "trials " << summary.trials << ", seed " << seed << "\n";
  out << "achieved_dof = " << (summary.achieved_dof ? to_string(*summary.achieved_dof, ", ") : "none")
      << "; failures " << summary.failures << "\n";
  out << "max_residual = " << format_double(summary.max_residual)
      << ", worst_condition = " << format_double(summary.worst_condition) << "\n";

  bool matches = false;
  if (summary.achieved_dof) {
    if (q.point) {
      matches = *summary.achieved_dof == *q.point;
      out << "point Q = " << to_string(*q.point, ", ") << (matches ? " (match)" : " (MISMATCH)") << "\n";
    } else {
      matches = q.face.tight_at(*summary.achieved_dof);
      out << "face " << to_string(q.face) << (matches ? " attained" : " NOT attained") << "\n";
    }
  }

  if (!cfg.transcript.empty()) {
    const auto sub = sub_seeds(seed, 1).front();
    std::uint64_t state = sub ^ 0x5DEECE66DULL;
    const auto tr = run_phases(spec, generate_channels(spec, sub), generate_symbols(spec, splitmix64(state)));
    Json doc = to_json(tr);
    doc["decoding"] = to_json(decode(tr));
    std::ofstream(cfg.transcript, std::ios::binary) << doc.dump(2) << "\n";
    out << "wrote " << cfg.transcript << "\n";
  }
  if (!cfg.out.empty()) {
    if (cfg.format == "json")
      write_artifact(cfg, to_json(summary).dump(2) + "\n", out);
    else if (cfg.format == "csv")
    {
      std::vector<RationalVector> points;
      if (summary.achieved_dof) points.push_back(*summary.achieved_dof);
      write_artifact(cfg, points_csv(2, points), out);
    }
    else
      throw UsageError("simulate writes csv or json");
  }

  report_failures(summary, err);
  if (!summary.ok() || !matches) {
    err << "verification failed\n";
    return kExitVerification;
  }
  return kExitOk;
}

inline int simulate_three_user(const RunConfig& cfg, int M, int N, std::uint64_t seed, std::ostream& out,
                               std::ostream& err) {
  std::vector<DoFPoint> targets;
  if (!cfg.target.empty()) {
    try {
      targets.push_back(parse_vector(cfg.target));
    } catch (const std::exception&) {
      throw UsageError("--target: expected p/q,p/q,p/q");
    }
  } else {
    targets = vertex_enumerate(three_user_region(M, N));
  }

  bool ok = true;
  Json docs = Json::array();
  for (const auto& target : targets) {
    const auto ex = execute_plan(achievability_plan(M, N, target), cfg.trials, seed);
    out << "target " << point_text(target) << ":\n";
    for (const auto& r : ex.runs) {
      out << "  " << r.component.weight.str() << " x " << point_text(r.component.point) << " ["
          << name(r.component.source) << "] " << name(r.status);
      if (r.status != ComponentStatus::not_simulated)
        out << (r.verified ? ", verified" : ", FAILED");
      if (r.summary) out << ", failures " << r.summary->failures;
      out << "\n";
      if (r.summary) report_failures(*r.summary, err);
    }
    ok = ok && ex.ok();
    docs.push_back(to_json(ex.plan));
  }
  if (!cfg.out.empty()) {
    if (cfg.format == "json") {
      write_artifact(cfg, docs.dump(2) + "\n", out);
    } else if (cfg.format == "csv") {
      std::string csv;
      for (const auto& t : targets) csv += plan_csv(achievability_plan(M, N, t));
      write_artifact(cfg, csv, out);
    } else {
      throw UsageError("simulate writes csv or json");
    }
  }
  if (!ok) {
    err << "verification failed\n";
    return kExitVerification;
  }
  return kExitOk;
}

inline int cmd_simulate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const int M = parse_single(cfg.M, "--M");
  const auto n = parse_int_list(cfg.N, "--N");
  if (cfg.trials < 1) throw UsageError("--trials must be at least 1");
  const auto seed = resolve_seed(cfg);
  if (n.size() == 2 && cfg.model != "three-user") return simulate_two_user(cfg, M, n[0], n[1], seed, out, err);
  if (n.size() == 3 || cfg.model == "three-user") return simulate_three_user(cfg, M, symmetric_N(n), seed, out, err);
  throw UsageError("simulate needs two users or a symmetric three-user configuration");
}

// ---------------------------------------------------------------- slice

inline int cmd_slice(const RunConfig& cfg, std::ostream& out) {
  const int M = parse_single(cfg.M, "--M");
  const int N = symmetric_N(parse_int_list(cfg.N, "--N"));
  const Rational d3 = parse_rational(cfg.d3, "--d3");
  const PlaneSlice s = plane_slice(M, N, d3);
  const DoFRegion poly = remove_redundant(s.region());
  const auto vertices = vertex_enumerate(poly);

  out << "slice d3 = " << d3.str() << " of M=" << M << ", N=" << N << "\n";
  for (std::size_t i = 0; i < 3; ++i) {
    const bool kept = std::find(poly.halfspaces().begin(), poly.halfspaces().end(), s.bounds[i]) !=
                      poly.halfspaces().end();
    out << "  L" << i << ": " << to_string(s.bounds[i]) << (kept ? "" : "  (redundant)") << "\n";
  }
  out << "special points:\n";
  for (const auto& [which, p] : s.special_points)
    out << "  " << name(which) << " = " << point_text({p[0], p[1]}) << "\n";

  if (cfg.format == "json") {
    Json bounds = Json::array();
    for (const auto& h : s.bounds) bounds.push_back(to_json(h));
    Json points = Json::object();
    for (const auto& [which, p] : s.special_points) points[std::string(name(which))] = to_json(p);
    Json vs = Json::array();
    for (const auto& v : vertices) vs.push_back(to_json(v));
    const Json doc{{"M", M}, {"N", N}, {"d3", d3.str()}, {"bounds", bounds}, {"special_points", points},
                   {"vertices", vs}};
    write_artifact(cfg, doc.dump(2) + "\n", out);
  } else if (cfg.format == "svg") {
    svg::Figure fig;
    fig.extent = std::min(M, 2 * N);
    fig.title = "M=" + std::to_string(M) + ", N=" + std::to_string(N) + ", d3=" + d3.str();
    fig.polygons.push_back({vertices, fig.title});
    for (const auto& [which, p] : s.special_points)
      fig.markers.push_back({{p[0], p[1]}, std::string(name(which))});
    write_artifact(cfg, svg::render(fig), out);
  } else {
    if (cfg.out.empty()) out << "vertices:\n";
    write_artifact(cfg, points_csv(2, vertices), out);
  }
  return kExitOk;
}

// ---------------------------------------------------------------- rate

inline int cmd_rate(const RunConfig& cfg, std::ostream& out) {
  const int M = parse_single(cfg.M, "--M");
  const auto n = parse_int_list(cfg.N, "--N");
  if (n.size() != 2) throw UsageError("rate needs --N with exactly two values");
  const auto snr = parse_double_list(cfg.snr_db, "--snr-db");
  const auto spec = plan_two_user(M, n[0], n[1]);
  const auto curve = rate_slope_estimate(spec, resolve_seed(cfg), snr);

  std::ostringstream slopes;
  slopes << std::fixed << std::setprecision(4) << "slope = " << curve.slope[0] << ", " << curve.slope[1]
         << "; sum " << curve.sum_slope() << "\n";
  if (cfg.format != "csv") throw UsageError("rate writes csv");
  write_artifact(cfg, rate_curve_csv(curve), out);
  out << slopes.str();
  return kExitOk;
}

// ---------------------------------------------------------------- entry

/// Runs the command line `args` (without the program name). Returns the
/// process exit code.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact DoF regions and retrospective interference alignment for MIMO broadcast channels"};
  app.name("doflab");
  app.require_subcommand(1);
  RunConfig cfg;

  auto common = [&](CLI::App* sub, bool needs_n = true) {
    sub->add_option("--M", cfg.M, "transmit antennas")->required();
    auto* n = sub->add_option("--N", cfg.N, "receive antennas per user, comma separated");
    if (needs_n) n->required();
    sub->add_option("--out", cfg.out, "output file (stdout when omitted)");
    sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"csv", "json", "svg"}));
  };

  auto* region = app.add_subcommand("region", "half-spaces and vertices of a DoF region");
  common(region);
  region->add_option("--model", cfg.model, "outer, two-user or three-user")
      ->check(CLI::IsMember({"outer", "two-user", "three-user"}));

  auto* compare = app.add_subcommand("compare", "two-user regions over a sweep of M");
  compare->add_option("--M", cfg.M, "comma-separated list of M (default 1..N1+N2+1)");
  compare->add_option("--N", cfg.N, "receive antennas of the two users")->required();
  compare->add_option("--out", cfg.out, "output file");
  compare->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"csv", "json", "svg"}));

  auto* simulate = app.add_subcommand("simulate", "run the alignment scheme over random channels");
  common(simulate);
  simulate->add_option("--model", cfg.model, "two-user or three-user")
      ->check(CLI::IsMember({"two-user", "three-user"}));
  simulate->add_option("--trials", cfg.trials, "number of independent trials");
  simulate->add_option("--seed", cfg.seed, "master seed (default $DOFLAB_SEED or 1)");
  simulate->add_option("--target", cfg.target, "three-user DoF target p/q,p/q,p/q");
  simulate->add_option("--transcript", cfg.transcript, "write the first trial's transcript as JSON");

  auto* slice = app.add_subcommand("slice", "cross-section of the three-user region at fixed d3");
  common(slice);
  slice->add_option("--d3", cfg.d3, "height of the slice, p/q");

  auto* rate = app.add_subcommand("rate", "finite-SNR Gaussian rates and their slopes");
  common(rate);
  rate->add_option("--seed", cfg.seed, "channel seed (default $DOFLAB_SEED or 1)");
  rate->add_option("--snr-db", cfg.snr_db, "comma-separated SNR points in dB");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (region->parsed()) return cmd_region(cfg, out);
    if (compare->parsed()) return cmd_compare(cfg, out);
    if (simulate->parsed()) return cmd_simulate(cfg, out, err);
    if (slice->parsed()) return cmd_slice(cfg, out);
    if (rate->parsed()) return cmd_rate(cfg, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const SingularChannelError& e) {
    err << "error: " << e.what() << "\n";
    return kExitVerification;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace doflab::cli

#endif  // DOFLAB_CLI_HPP
