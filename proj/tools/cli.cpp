#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "macroq/analytic.hpp"
#include "macroq/catalog.hpp"
#include "macroq/format.hpp"
#include "macroq/grover.hpp"
#include "macroq/parallel.hpp"
#include "macroq/pindex.hpp"
#include "macroq/random.hpp"
#include "macroq/svg.hpp"
#include "macroq/vcm.hpp"

namespace macroq::cli {

namespace {

using json = nlohmann::ordered_json;
namespace fs = std::filesystem;

struct Global {
  std::uint64_t seed = 1;
  std::string out_dir = ".";
  unsigned threads = 1;
  FitOptions fit;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

fs::path output_path(const Global& g, const std::string& name) {
  const fs::path dir(g.out_dir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw std::runtime_error("cannot create output directory " + dir.string());
  return dir / name;
}

std::ofstream open_output(const fs::path& path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot write " + path.string());
  os.imbue(std::locale::classic());
  return os;
}

double r12(double v) { return round_significant(v); }

// Tracks the first failed invariant over a run.
struct Checks {
  std::size_t vcms = 0;
  std::size_t failures = 0;
  std::string first;

  void vcm(const Vcm& v, const std::string& where) {
    ++vcms;
    const auto inv = check_vcm_invariants(v);
    if (!inv.ok) fail(where + ": " + inv.violation);
  }
  void fail(const std::string& what) {
    if (failures++ == 0) first = what;
  }
  bool ok() const { return failures == 0; }
};

int report_checks(const Checks& c, std::ostream& err) {
  if (c.ok()) return kExitOk;
  err << "invariant check failed (" << c.failures << "): " << c.first << '\n';
  return kExitCheckFailed;
}

GroverInstance instance_from_flags(int L, const std::string& solutions, int random_m,
                                   std::uint64_t seed) {
  if (!solutions.empty()) return build_instance(L, parse_solutions(solutions));
  if (random_m > 0) return random_instance(L, random_m, derive_seed(seed, L));
  throw UsageError("give --solutions or --random M");
}

// ---------------------------------------------------------------- grover trace

struct TraceArgs {
  int L = 0;
  std::string solutions;
  int random_m = 0;
  std::string out = "trace";
};

int cmd_grover_trace(const Global& g, const TraceArgs& a, std::ostream& out, std::ostream& err) {
  const GroverInstance inst = instance_from_flags(a.L, a.solutions, a.random_m, g.seed);
  Checks checks;
  VcmOptions vo;
  vo.threads = g.threads;
  const StepTrace trace = run_with_trace(inst, [&](const PureState& s, long long step, StepLabel) {
    const Vcm v = compute_vcm(s, vo);
    checks.vcm(v, "step " + std::to_string(step));
    return v.e_max;
  });
  if (!trace.valid) checks.fail(trace.error);

  const fs::path csv = output_path(g, a.out + ".csv");
  {
    auto os = open_output(csv);
    write_trace_csv(os, trace);
  }
  LinePlot plot;
  plot.title = "e_max along the Grover schedule, L=" + std::to_string(inst.num_qubits) +
               ", solutions " + format_solutions(inst.solutions);
  plot.x_label = "step";
  plot.y_label = "e_max";
  plot.reference_y = 2.0;
  PlotSeries series;
  double peak = 0.0;
  for (const auto& r : trace.records) {
    series.x.push_back(static_cast<double>(r.step));
    series.y.push_back(r.e_max);
    peak = std::max(peak, r.e_max);
  }
  plot.series.push_back(std::move(series));
  {
    auto os = open_output(output_path(g, a.out + ".svg"));
    write_svg(os, plot);
  }

  out << "L=" << inst.num_qubits << " solutions=" << format_solutions(inst.solutions)
      << " R=" << inst.iterations << " T_Q=" << trace.total_steps
      << " rows=" << trace.records.size() << " max_e_max=" << format_number(peak)
      << " final_e_max="
      << (trace.records.empty() ? std::string("nan") : format_number(trace.records.back().e_max))
      << '\n'
      << "wrote " << csv.string() << '\n';
  return report_checks(checks, err);
}

// ----------------------------------------------------------------- grover scan

struct ScanArgs {
  int l_min = 8;
  int l_max = 16;
  std::vector<double> fractions{2, 3, 4};
  int instances = 5;
  int m = 1;
  std::string pattern = "random";
  std::string catalog_name;
  std::string out = "scan";
};

struct ScanRow {
  int L = 0;
  double s = 0;
  int k_star = 0;
  std::uint64_t seed = 0;
  std::string solutions;
  double e_max = 0.0;
};

std::vector<BasisIndex> profile_solutions(const std::string& pattern, int L) {
  const BasisIndex n = BasisIndex{1} << L;
  if (pattern == "profile1") return {2, n - 1};
  if (pattern == "profile2") return {n / 2 - 1, n / 2};
  throw UsageError("unknown --pattern '" + pattern + "'");
}

int cmd_grover_scan(const Global& g, const ScanArgs& a, std::ostream& out, std::ostream& err) {
  if (a.l_min < 6) throw UsageError("--Lmin must be >= 6");
  if (a.l_max > kMaxQubits) throw UsageError("--Lmax must be <= " + std::to_string(kMaxQubits));
  if (a.l_max < a.l_min) throw UsageError("--Lmax < --Lmin");
  if (a.instances < 1) throw UsageError("--instances must be positive");
  for (double s : a.fractions) {
    if (!(s >= 1.0)) throw UsageError("fractions must be >= 1");
  }

  const bool synthetic = !a.catalog_name.empty();
  const bool random = !synthetic && a.pattern == "random";
  const CatalogEntry* entry = synthetic ? &catalog_entry(a.catalog_name) : nullptr;

  struct Job {
    int L;
    int instance;
  };
  std::vector<Job> jobs;
  for (int L = a.l_min; L <= a.l_max; ++L) {
    if (entry && entry->even_sites_only && L % 2 != 0) continue;
    const int count = random ? a.instances : 1;
    for (int i = 0; i < count; ++i) jobs.push_back({L, i});
  }

  std::vector<std::vector<ScanRow>> results(jobs.size());
  std::vector<std::vector<Vcm>> vcms(jobs.size());
  parallel_for(jobs.size(), g.threads, [&](std::size_t j) {
    const Job job = jobs[j];
    if (entry) {
      const Vcm v = compute_vcm(entry->constructor(job.L));
      results[j].push_back({job.L, 0, 0, 0, entry->name, v.e_max});
      vcms[j].push_back(v);
      return;
    }
    std::uint64_t seed = 0;
    GroverInstance inst;
    if (random) {
      seed = derive_seed(g.seed, job.L, job.instance);
      inst = random_instance(job.L, a.m, seed);
    } else {
      inst = build_instance(job.L, profile_solutions(a.pattern, job.L));
    }
    for (double s : a.fractions) {
      const int k = k_star(inst.iterations, s);
      const Vcm v = compute_vcm(closed_form_state(inst, k));
      results[j].push_back({job.L, s, k, seed, format_solutions(inst.solutions), v.e_max});
      vcms[j].push_back(v);
    }
  });

  Checks checks;
  std::map<double, FamilySample> families;
  const fs::path csv = output_path(g, a.out + ".csv");
  {
    auto os = open_output(csv);
    os << "L,s,k_star,seed,solutions,e_max\n";
    for (std::size_t j = 0; j < jobs.size(); ++j) {
      for (std::size_t r = 0; r < results[j].size(); ++r) {
        const ScanRow& row = results[j][r];
        checks.vcm(vcms[j][r], "L=" + std::to_string(row.L) + " " + row.solutions);
        os << row.L << ',' << format_number(row.s) << ',' << row.k_star << ',' << row.seed << ','
           << row.solutions << ',' << format_number(row.e_max) << '\n';
        auto& fam = families[row.s];
        fam.label = entry ? entry->name : "s=" + format_number(row.s);
        fam.points.push_back({row.L, row.seed ? std::to_string(row.seed) : row.solutions, row.e_max});
      }
    }
  }

  json fits = json::array();
  LinePlot plot;
  plot.title = entry ? "e_max of " + entry->name : "e_max at k* = ceil(R/s)";
  plot.x_label = "L";
  plot.y_label = "median e_max";
  plot.reference_y = 2.0;
  for (const auto& [s, fam] : families) {
    const IndexEstimate est = fit_pe(fam, g.fit);
    std::ostringstream one;
    write_fit_json(one, est, fam);
    fits.push_back(json::parse(one.str()));
    if (!est.in_sanity_band) checks.fail(fam.label + ": p_e " + format_number(est.p_e) + " outside [0.5, 2.5]");
    out << fam.label << " p_e=" << format_number(est.p_e, 6)
        << " stderr=" << format_number(est.slope_stderr, 3)
        << " class=" << pclass_name(est.classification)
        << " linear_slope=" << format_number(est.linear.slope, 6) << '\n';

    // Plot every size, not just the fitted ones.
    std::map<int, std::vector<double>> by_size;
    for (const auto& p : fam.points) by_size[p.num_sites].push_back(p.e_max);
    PlotSeries series;
    series.label = fam.label;
    series.markers = true;
    for (const auto& [L, values] : by_size) {
      series.x.push_back(L);
      series.y.push_back(median_over_instances(values));
    }
    plot.series.push_back(std::move(series));
  }
  {
    auto os = open_output(output_path(g, a.out + "_fit.json"));
    os << fits.dump(2) << '\n';
  }
  {
    auto os = open_output(output_path(g, a.out + ".svg"));
    write_svg(os, plot);
  }
  out << "wrote " << csv.string() << '\n';
  return report_checks(checks, err);
}

// --------------------------------------------------------------- state analyze

struct AnalyzeArgs {
  std::string catalog_name;
  int L = 0;
  std::string from_file;
  std::string solutions;
  int k = -1;
  double s = 0.0;
  bool brute_force = false;
  int restarts = 32;
  int iterations = 500;
  std::string dump;
  std::string vcm_csv;
  std::string out;
};

int cmd_state_analyze(const Global& g, const AnalyzeArgs& a, std::ostream& out, std::ostream& err) {
  const int sources = !a.catalog_name.empty() + !a.from_file.empty() + !a.solutions.empty();
  if (sources != 1) throw UsageError("give exactly one of --catalog, --from-file, --solutions");

  json report;
  std::optional<PureState> state;
  const CatalogEntry* entry = nullptr;
  if (!a.catalog_name.empty()) {
    if (a.L <= 0) throw UsageError("--catalog needs --L");
    entry = &catalog_entry(a.catalog_name);
    state = entry->constructor(a.L);
    report["source"] = "catalog:" + entry->name;
  } else if (!a.from_file.empty()) {
    state = load_state(a.from_file);
    report["source"] = "file:" + a.from_file;
  } else {
    if (a.L <= 0) throw UsageError("--solutions needs --L");
    const GroverInstance inst = build_instance(a.L, parse_solutions(a.solutions));
    int k = a.k;
    if (a.s > 0.0) k = k_star(inst.iterations, a.s);
    if (k < 0) k = inst.iterations;
    state = closed_form_state(inst, k);
    report["source"] = "grover:" + format_solutions(inst.solutions);
    report["R"] = inst.iterations;
    report["k"] = k;
  }
  if (!a.dump.empty()) save_state(a.dump, *state);

  Checks checks;
  VcmOptions vo;
  vo.threads = g.threads;
  const Vcm vcm = compute_vcm(*state, vo);
  checks.vcm(vcm, "state");
  if (!a.vcm_csv.empty()) {
    auto os = open_output(a.vcm_csv);
    write_vcm_csv(os, vcm);
  }
  const int L = state->num_qubits();
  const auto top = max_fluctuating_operator(vcm);
  const double c = c_factor(top);
  report["L"] = L;
  report["e_max"] = r12(vcm.e_max);
  report["trace"] = r12(vcm.trace());
  report["min_eigenvalue"] = r12(vcm.min_eigenvalue());
  report["degenerate"] = vcm.degenerate;
  report["C"] = r12(c);
  report["max_fluctuation_sumL"] = r12(vcm.e_max * L);
  report["max_fluctuation_per_site"] = r12(vcm.e_max * L / c);
  json coeffs = json::array();
  for (int l = 1; l <= L; ++l) {
    for (auto axis : kPauliAxes) {
      const cplx z = top.at(l, axis);
      coeffs.push_back({{"l", l}, {"axis", std::string(1, axis_name(axis))},
                        {"re", r12(z.real())}, {"im", r12(z.imag())}});
    }
  }
  report["top_operator"] = std::move(coeffs);
  const double check = std::abs(quadratic_fluctuation(vcm, top) - fluctuation_of(*state, top));
  report["top_operator_direct_residual"] = r12(check);
  if (check > 1e-8 * std::max(1.0, vcm.e_max * L)) {
    checks.fail("top operator fluctuation disagrees with the direct evaluation by " + format_number(check));
  }

  if (entry) {
    json cat;
    cat["expected_p"] = entry->expected_p;
    cat["note"] = "p=" + std::to_string(entry->expected_p) + " family";
    if (entry->expected_emax) {
      const double want = (*entry->expected_emax)(L);
      const bool match = std::abs(want - vcm.e_max) <= 1e-9;
      cat["expected_e_max"] = r12(want);
      cat["expected_e_max_formula"] = entry->expected_emax_text;
      cat["e_max_matches"] = match;
      if (!match) checks.fail("e_max " + format_number(vcm.e_max) + " != expected " + format_number(want));
    }
    if (entry->witness) {
      cat["witness"] = entry->witness_text;
      cat["witness_fluctuation"] = r12(fluctuation_of(*state, (*entry->witness)(L)));
    }
    report["catalog"] = std::move(cat);
  }

  if (a.brute_force) {
    BruteForceOptions bo;
    bo.restarts = a.restarts;
    bo.iterations = a.iterations;
    bo.seed = derive_seed(g.seed, 0x6266ULL);
    bo.threads = g.threads;
    const auto bf = brute_force_max_fluctuation(*state, bo);
    const double lo = vcm.e_max * L / c - 1e-4;
    const double hi = vcm.e_max * L + 1e-6;
    const bool within = bf.best >= lo && bf.best <= hi;
    report["brute_force"] = {{"best", r12(bf.best)},
                             {"hermitian_best", r12(bf.hermitian_best)},
                             {"eigenvector_start", r12(bf.eigenvector_start_value)},
                             {"starts", bf.starts},
                             {"lower_bound", r12(lo)},
                             {"upper_bound", r12(hi)},
                             {"within_bounds", within}};
    if (!within) checks.fail("brute-force optimum " + format_number(bf.best) + " outside its bounds");
  }
  report["invariants_ok"] = checks.ok();

  const std::string text = report.dump(2) + "\n";
  out << text;
  if (!a.out.empty()) {
    auto os = open_output(output_path(g, a.out));
    os << text;
  }
  return report_checks(checks, err);
}

// -------------------------------------------------------------- analytic check

struct AnalyticArgs {
  int L = 0;
  int m = 1;
  std::string solutions;
  std::vector<double> fractions;
  std::string k;
  std::optional<double> solve_k;
  double mean_slack = 2.0;
  std::optional<double> variance_slack;
  std::string out;
};

int cmd_analytic_check(const Global& g, const AnalyticArgs& a, std::ostream& out, std::ostream& err) {
  json report;
  Checks checks;
  if (a.solve_k) {
    const double m = *a.solve_k;
    const double K = solve_K(m);
    const double f = entropy_gap(K, m);
    // f(K) = 0 is H2(K) = 1 - m with H2 the binary entropy in bits.
    const double h2 = -(K * std::log2(K) + (1.0 - K) * std::log2(1.0 - K));
    report["m"] = m;
    report["K"] = r12(K);
    report["f_K"] = f;
    report["binary_entropy_bits"] = r12(h2);
    report["entropy_identity_residual"] = std::abs(h2 - (1.0 - m));
    if (std::abs(f) > 1e-10) checks.fail("|f(K)| = " + format_number(std::abs(f)) + " > 1e-10");
    if (std::abs(h2 - (1.0 - m)) > 1e-9) checks.fail("binary-entropy identity violated");
  } else {
    if (a.L <= 0) throw UsageError("give --L (or --solve-K)");
    const GroverInstance inst =
        !a.solutions.empty() ? build_instance(a.L, parse_solutions(a.solutions))
                             : random_instance(a.L, a.m, derive_seed(g.seed, a.L));
    std::vector<int> ks;
    if (a.k == "all") {
      for (int k = 0; k <= inst.iterations; ++k) ks.push_back(k);
    } else if (!a.k.empty()) {
      ks.push_back(std::stoi(a.k));
    }
    for (double s : a.fractions) ks.push_back(k_star(inst.iterations, s));
    if (ks.empty()) throw UsageError("give --s or --k");

    const double L = a.L;
    const double var_slack = a.variance_slack.value_or(3.0 * L);
    double worst_mean = 0.0, worst_var = 0.0;
    json rows = json::array();
    for (int k : ks) {
      const MxMoments f = grover_mx_moments(inst, k);
      const Moments sim = magnetization_moments(closed_form_state(inst, k), total_mx(a.L));
      const double mean_formula = f.mean_leading * L;
      const double var_formula = f.variance_leading * L * L;
      const double mean_res = std::abs(sim.mean - mean_formula);
      const double var_res = std::abs(sim.variance - var_formula);
      worst_mean = std::max(worst_mean, mean_res);
      worst_var = std::max(worst_var, var_res);
      rows.push_back({{"k", k},
                      {"mean_formula", r12(mean_formula)},
                      {"mean_simulated", r12(sim.mean)},
                      {"mean_residual", r12(mean_res)},
                      {"variance_formula", r12(var_formula)},
                      {"variance_simulated", r12(sim.variance)},
                      {"variance_residual", r12(var_res)},
                      {"variance_over_quarter_L2", r12(sim.variance / (0.25 * L * L))}});
    }
    report["L"] = a.L;
    report["solutions"] = format_solutions(inst.solutions);
    report["R"] = inst.iterations;
    report["theta"] = r12(inst.theta);
    report["mean_slack"] = a.mean_slack;
    report["variance_slack"] = r12(var_slack);
    report["max_mean_residual"] = r12(worst_mean);
    report["max_variance_residual"] = r12(worst_var);
    report["rows"] = std::move(rows);
    if (worst_mean > a.mean_slack) checks.fail("mean residual " + format_number(worst_mean) + " exceeds slack");
    if (worst_var > var_slack) checks.fail("variance residual " + format_number(worst_var) + " exceeds slack");
  }
  report["pass"] = checks.ok();
  const std::string text = report.dump(2) + "\n";
  out << text;
  if (!a.out.empty()) {
    auto os = open_output(output_path(g, a.out));
    os << text;
  }
  return report_checks(checks, err);
}

// ---------------------------------------------------------------- catalog list

int cmd_catalog_list(std::ostream& out) {
  out << "name\texpected_p\texpected_e_max\twitness\n";
  for (const auto& e : catalog()) {
    out << e.name << '\t' << e.expected_p << '\t'
        << (e.expected_emax_text.empty() ? "-" : e.expected_emax_text) << '\t'
        << (e.witness_text.empty() ? "-" : e.witness_text) << '\n';
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Macroscopic superposition analysis of Grover states"};
  app.name("macroq");
  app.require_subcommand(1);
  app.fallthrough();

  Global g;
  app.add_option("--seed", g.seed, "Seed for every random choice")->capture_default_str();
  app.add_option("--out-dir", g.out_dir, "Directory for output files")->capture_default_str();
  app.add_option("--threads", g.threads, "Worker threads (0 = all cores)")->capture_default_str();
  app.add_option("--pe-upper-band", g.fit.upper_band, "p_e at or above this is P_EQ_2")
      ->capture_default_str();
  app.add_option("--pe-lower-band", g.fit.lower_band, "p_e at or below this is P_EQ_1")
      ->capture_default_str();
  app.add_option("--fit-min-L", g.fit.min_sites, "Smallest L used by the p_e fit")
      ->capture_default_str();

  auto* grover = app.add_subcommand("grover", "Grover experiments");
  grover->require_subcommand(1);

  TraceArgs ta;
  auto* trace = grover->add_subcommand("trace", "e_max after every gate of the schedule");
  trace->add_option("--L", ta.L, "Number of qubits")->required();
  auto* sol = trace->add_option("--solutions", ta.solutions, "Solution indices, comma separated");
  auto* rnd = trace->add_option("--random", ta.random_m, "Draw M random solutions");
  sol->excludes(rnd);
  trace->add_option("--out", ta.out, "Output file stem")->capture_default_str();

  ScanArgs sa;
  auto* scan = grover->add_subcommand("scan", "e_max at k* = ceil(R/s) across L, and the p_e fit");
  scan->add_option("--Lmin", sa.l_min)->capture_default_str();
  scan->add_option("--Lmax", sa.l_max)->capture_default_str();
  scan->add_option("--fractions", sa.fractions, "Divisors s")->delimiter(',')->capture_default_str();
  scan->add_option("--instances", sa.instances, "Random instances per L")->capture_default_str();
  scan->add_option("--M", sa.m, "Solutions per random instance")->capture_default_str();
  scan->add_option("--pattern", sa.pattern, "random, profile1 (2, N-1) or profile2 (N/2-1, N/2)")
      ->check(CLI::IsMember({"random", "profile1", "profile2"}))
      ->capture_default_str();
  scan->add_option("--catalog", sa.catalog_name, "Scan a catalog state family instead");
  scan->add_option("--out", sa.out, "Output file stem")->capture_default_str();

  AnalyzeArgs aa;
  auto* state = app.add_subcommand("state", "Single-state analysis");
  state->require_subcommand(1);
  auto* analyze = state->add_subcommand("analyze", "VCM report for one state");
  analyze->add_option("--catalog", aa.catalog_name, "Catalog state name");
  analyze->add_option("--L", aa.L, "Number of qubits");
  analyze->add_option("--from-file", aa.from_file, "State file (L=<n>, then `index re im` lines)");
  analyze->add_option("--solutions", aa.solutions, "Grover instance solutions");
  auto* k_opt = analyze->add_option("--k", aa.k, "Grover iteration (default R)");
  auto* s_opt = analyze->add_option("--s", aa.s, "Use k* = ceil(R/s)");
  k_opt->excludes(s_opt);
  analyze->add_flag("--brute-force", aa.brute_force, "Run the brute-force optimizer (L <= 12)");
  analyze->add_option("--restarts", aa.restarts)->capture_default_str();
  analyze->add_option("--iterations", aa.iterations)->capture_default_str();
  analyze->add_option("--dump", aa.dump, "Save the analyzed state to this file");
  analyze->add_option("--vcm-csv", aa.vcm_csv, "Write the VCM entries as CSV");
  analyze->add_option("--out", aa.out, "Also write the report to this file in --out-dir");

  AnalyticArgs an;
  auto* analytic = app.add_subcommand("analytic", "Closed-form checks");
  analytic->require_subcommand(1);
  auto* check = analytic->add_subcommand("check", "Formula vs simulation residuals");
  check->add_option("--L", an.L);
  check->add_option("--M", an.m)->capture_default_str();
  check->add_option("--solutions", an.solutions);
  check->add_option("--s", an.fractions, "Divisors s for k* = ceil(R/s)")->delimiter(',');
  check->add_option("--k", an.k, "Iteration, or `all`");
  check->add_option("--solve-K", an.solve_k, "Solve f(K) = 0 for this m");
  check->add_option("--mean-slack", an.mean_slack)->capture_default_str();
  check->add_option("--variance-slack", an.variance_slack, "Default 3L");
  check->add_option("--out", an.out, "Also write the report to this file in --out-dir");

  auto* cat = app.add_subcommand("catalog", "Reference states");
  cat->require_subcommand(1);
  auto* list = cat->add_subcommand("list", "List catalog states");

  const ClassicLocaleGuard classic_out(out);
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadInput;
  }

  try {
    if (*trace) return cmd_grover_trace(g, ta, out, err);
    if (*scan) return cmd_grover_scan(g, sa, out, err);
    if (*analyze) return cmd_state_analyze(g, aa, out, err);
    if (*check) return cmd_analytic_check(g, an, out, err);
    if (*list) return cmd_catalog_list(out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadInput;
  }
  err << "error: no command\n";
  return kExitBadInput;
}

}  // namespace macroq::cli
