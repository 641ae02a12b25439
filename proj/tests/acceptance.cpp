// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "macroq/analytic.hpp"
#include "macroq/catalog.hpp"
#include "macroq/format.hpp"
#include "macroq/grover.hpp"
#include "macroq/pindex.hpp"
#include "macroq/random.hpp"
#include "macroq/vcm.hpp"

using namespace macroq;

namespace {

std::uint64_t g_seed = 20240601;

// Structural record of every VCM computed by criteria 1-6.
struct StructureLog {
  std::size_t count = 0;
  std::size_t failures = 0;
  double worst_hermiticity = 0.0;
  double min_eigenvalue = INFINITY;
  std::string first_failure;

  void add(const Vcm& v) {
    ++count;
    const auto inv = check_vcm_invariants(v, 1e-9);
    worst_hermiticity = std::max(worst_hermiticity, inv.hermiticity_error);
    min_eigenvalue = std::min(min_eigenvalue, inv.min_eigenvalue);
    if (!inv.ok && failures++ == 0) first_failure = inv.violation;
  }
} g_structure;

Vcm logged_vcm(const PureState& s) {
  Vcm v = compute_vcm(s);
  g_structure.add(v);
  return v;
}

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::string num(double v, int digits = 6) { return format_number(v, digits); }

// ---------------------------------------------------------------------------

Outcome product_baseline() {
  Outcome o;
  double worst = 0.0;
  for (int L : {4, 8, 12, 16}) {
    for (int i = 0; i < 200; ++i) {
      const Vcm v = logged_vcm(random_product_state(L, derive_seed(g_seed, 1, L, i)));
      worst = std::max(worst, std::abs(v.e_max - 2.0));
    }
  }
  o.pass = worst <= 1e-9;
  o.detail = "800 states, max |e_max - 2| = " + num(worst, 3);
  return o;
}

Outcome ht_plateau() {
  Outcome o;
  const auto inst = build_instance(8, {19});
  const auto trace =
      run_with_trace(inst, [](const PureState& s, long long, StepLabel) { return logged_vcm(s).e_max; });
  double plateau = 0.0, drift = 0.0;
  for (std::size_t i = 0; i < trace.records.size(); ++i) {
    if (i <= 8) plateau = std::max(plateau, std::abs(trace.records[i].e_max - 2.0));
    if (i > 0 && trace.records[i].label == StepLabel::Hadamard) {
      drift = std::max(drift, std::abs(trace.records[i].e_max - trace.records[i - 1].e_max));
    }
  }
  o.pass = trace.valid && trace.records.size() == 243 && plateau <= 1e-9 && drift <= 1e-9;
  o.detail = std::to_string(trace.records.size()) + " steps, plateau dev " + num(plateau, 3) +
             ", max HT drift " + num(drift, 3);
  return o;
}

Outcome closed_form_equivalence() {
  Outcome o;
  double worst = 0.0;
  for (auto [L, M] : {std::pair{10, 1}, std::pair{12, 1}, std::pair{10, 2}}) {
    const auto inst = random_instance(L, M, derive_seed(g_seed, 3, L, M));
    PureState s(L);
    hadamard_transform(s);
    for (int k = 0; k <= inst.iterations; ++k) {
      worst = std::max(worst, 1.0 - fidelity(s, closed_form_state(inst, k)));
      if (k < inst.iterations) grover_iteration(s, inst);
    }
  }
  o.pass = worst <= 1e-10;
  o.detail = "max 1 - fidelity = " + num(worst, 3);
  return o;
}

Outcome moment_formulas() {
  Outcome o;
  const int L = 14;
  const auto inst = random_instance(L, 1, derive_seed(g_seed, 4));
  double worst_mean = 0.0, worst_var = 0.0;
  for (double s : {2.0, 3.0, 4.0}) {
    const int k = k_star(inst.iterations, s);
    const PureState psi = closed_form_state(inst, k);
    logged_vcm(psi);
    const auto f = grover_mx_moments(inst, k);
    const auto sim = magnetization_moments(psi, total_mx(L));
    worst_mean = std::max(worst_mean, std::abs(sim.mean - f.mean_leading * L));
    worst_var = std::max(worst_var, std::abs(sim.variance - f.variance_leading * L * L));
  }
  o.pass = worst_mean <= 2.0 && worst_var <= 3.0 * L;
  o.detail = "max mean residual " + num(worst_mean, 4) + " (<= 2), max variance residual " +
             num(worst_var, 4) + " (<= " + std::to_string(3 * L) + ")";
  return o;
}

IndexEstimate fit_family(const std::string& label, int lmin, int lmax,
                         const std::function<std::vector<double>(int)>& sample) {
  FamilySample fam{label, {}};
  for (int L = lmin; L <= lmax; ++L) {
    for (double e : sample(L)) fam.points.push_back({L, "", e});
  }
  return fit_pe(fam);
}

Outcome scaling_fit() {
  Outcome o;
  std::ostringstream d;
  for (double s : {2.0, 3.0, 4.0}) {
    const auto est = fit_family("s", 8, 16, [&](int L) {
      std::vector<double> e;
      for (int i = 0; i < 5; ++i) {
        const auto inst = random_instance(L, 1, derive_seed(g_seed, L, i));
        e.push_back(logged_vcm(closed_form_state(inst, k_star(inst.iterations, s))).e_max);
      }
      return e;
    });
    const bool ok = est.p_e >= 1.8 && est.p_e <= 2.2;
    o.pass = o.pass && ok;
    d << "s=" << s << " p_e=" << num(est.p_e, 4) << (ok ? "" : "(out)")
      << " [lin slope " << num(est.linear.slope, 3) << "]; ";
  }
  auto single = [](PureState (*make)(int)) {
    return [make](int L) { return std::vector<double>{logged_vcm(make(L)).e_max}; };
  };
  const auto ghz_fit = fit_family("ghz", 8, 16, single(ghz));
  const auto w_fit = fit_family("w", 8, 16, single(w_state));
  const auto prod_fit = fit_family("product", 8, 16, [](int L) {
    return std::vector<double>{logged_vcm(random_product_state(L, derive_seed(g_seed, 5, L))).e_max};
  });
  const bool ghz_ok = std::abs(ghz_fit.p_e - 2.0) <= 0.01;
  const bool w_ok = w_fit.p_e >= 0.9 && w_fit.p_e <= 1.2;
  const bool prod_ok = std::abs(prod_fit.p_e - 1.0) <= 0.01;
  o.pass = o.pass && ghz_ok && w_ok && prod_ok;
  d << "ghz " << num(ghz_fit.p_e, 4) << (ghz_ok ? "" : "(out)") << ", w " << num(w_fit.p_e, 4)
    << (w_ok ? "" : "(out)") << ", product " << num(prod_fit.p_e, 4) << (prod_ok ? "" : "(out)");
  o.detail = d.str();
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  std::vector<PureState> states;
  for (const auto& e : catalog()) {
    for (int L : {4, 6, 8, 10}) states.push_back(e.constructor(L));
  }
  for (int i = 0; i < 20; ++i) {
    const int L = 6 + i % 5;
    const double s = 2.0 + i % 3;
    const auto inst = random_instance(L, 1 + i % 2, derive_seed(g_seed, 6, i));
    states.push_back(closed_form_state(inst, k_star(inst.iterations, s)));
  }
  double worst_direct = 0.0;
  double worst_low = INFINITY, worst_high = INFINITY;
  std::size_t bound_failures = 0;
  for (std::size_t i = 0; i < states.size(); ++i) {
    const PureState& psi = states[i];
    const int L = psi.num_qubits();
    const Vcm v = logged_vcm(psi);
    const auto top = max_fluctuating_operator(v);
    const double c = c_factor(top);
    const auto per_site = to_per_site(top);
    worst_direct = std::max(worst_direct,
                            std::abs(quadratic_fluctuation(v, per_site) - fluctuation_of(psi, per_site)));
    BruteForceOptions bo;
    bo.seed = derive_seed(g_seed, 0x6f, i);
    const auto bf = brute_force_max_fluctuation(psi, bo);
    const double low = bf.best - (v.e_max * L / c - 1e-4);
    const double high = (v.e_max * L + 1e-6) - bf.best;
    worst_low = std::min(worst_low, low);
    worst_high = std::min(worst_high, high);
    if (low < 0.0 || high < 0.0) ++bound_failures;
  }
  o.pass = worst_direct <= 1e-8 && bound_failures == 0;
  o.detail = std::to_string(states.size()) + " states, max |c'Vc' - direct| " + num(worst_direct, 3) +
             ", bound margins low " + num(worst_low, 3) + " high " + num(worst_high, 3) +
             ", violations " + std::to_string(bound_failures);
  return o;
}

Outcome bound_at_least_l() {
  Outcome o;
  double worst = INFINITY;
  int failures = 0;
  for (int L = 3; L <= 8; ++L) {
    for (int i = 0; i < 50; ++i) {
      const PureState psi = haar_random_state(L, derive_seed(g_seed, 7, L, i));
      BruteForceOptions bo;
      bo.seed = derive_seed(g_seed, 0x70, L, i);
      const double margin = brute_force_max_fluctuation(psi, bo).best - L;
      worst = std::min(worst, margin);
      if (margin < -1e-6) ++failures;
    }
  }
  o.pass = failures == 0;
  o.detail = "300 Haar states, min (best - L) = " + num(worst, 4);
  return o;
}

Outcome vcm_structure() {
  Outcome o;
  o.pass = g_structure.failures == 0 && g_structure.count > 0;
  o.detail = std::to_string(g_structure.count) + " VCMs, max hermiticity error " +
             num(g_structure.worst_hermiticity, 3) + ", min eigenvalue " +
             num(g_structure.min_eigenvalue, 3);
  if (g_structure.failures) o.detail += ", first failure: " + g_structure.first_failure;
  return o;
}

Outcome entropy_root() {
  Outcome o;
  const double K = solve_K(0.5);
  const double h2 = -(K * std::log2(K) + (1 - K) * std::log2(1 - K));
  double worst = 0.0;
  for (int i = 1; i <= 9; ++i) {
    const double m = i / 10.0;
    worst = std::max(worst, std::abs(entropy_gap(solve_K(m), m)));
  }
  o.pass = std::abs(K - 0.8900) <= 1e-3 && std::abs(h2 - 0.5) <= 1e-9 && worst <= 1e-10;
  o.detail = "K(0.5) = " + num(K, 10) + ", H2(K) = " + num(h2, 10) + ", max |f(K)| = " + num(worst, 3);
  return o;
}

Outcome two_solution_profiles() {
  Outcome o;
  std::ostringstream d;
  const int L = 10;
  const BasisIndex n = BasisIndex{1} << L;
  const std::vector<BasisIndex> profiles[2] = {{2, n - 1}, {n / 2 - 1, n / 2}};
  for (int p = 0; p < 2; ++p) {
    const auto inst = build_instance(L, profiles[p]);
    const auto trace =
        run_with_trace(inst, [](const PureState& s, long long, StepLabel) { return compute_vcm(s).e_max; });
    double mid = 0.0;
    for (std::size_t i = 1; i + 1 < trace.records.size(); ++i) mid = std::max(mid, trace.records[i].e_max);
    const bool complete = trace.valid && static_cast<long long>(trace.records.size()) == inst.total_steps() + 1;
    o.pass = o.pass && complete && mid > 4.0;
    d << "profile " << p + 1 << " (" << format_solutions(inst.solutions) << "): "
      << (complete ? "complete" : "INCOMPLETE") << ", mid max " << num(mid, 4)
      << ", final " << num(trace.records.back().e_max, 4) << "; ";
  }
  for (int p = 0; p < 2; ++p) {
    const auto est = fit_family("profile", 8, 16, [&](int size) {
      const BasisIndex nn = BasisIndex{1} << size;
      const std::vector<BasisIndex> sols = p == 0 ? std::vector<BasisIndex>{2, nn - 1}
                                                  : std::vector<BasisIndex>{nn / 2 - 1, nn / 2};
      const auto inst = build_instance(size, sols);
      return std::vector<double>{compute_vcm(closed_form_state(inst, k_star(inst.iterations, 2))).e_max};
    });
    const bool ok = est.classification == PClass::PEq2;
    o.pass = o.pass && ok;
    d << "profile " << p + 1 << " k* fit p_e " << num(est.p_e, 4) << " " << pclass_name(est.classification)
      << "; ";
  }
  o.detail = d.str();
  return o;
}

struct Criterion {
  int id;
  const char* name;
  Outcome (*run)();
  double time_limit;  // seconds, 0 = none
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  int only = 0;
  app.add_option("--seed", g_seed, "Seed for random instances")->capture_default_str();
  app.add_option("--only", only, "Run a single criterion (8 then reports what ran)");
  CLI11_PARSE(app, argc, argv);

  const Criterion criteria[] = {
      {1, "product-state baseline", product_baseline, 10.0},
      {2, "HT plateau", ht_plateau, 120.0},
      {3, "closed-form equivalence", closed_form_equivalence, 0.0},
      {4, "moment formulas", moment_formulas, 0.0},
      {5, "scaling fit", scaling_fit, 300.0},
      {6, "oracle equivalence", oracle_equivalence, 0.0},
      {7, "fluctuation >= L", bound_at_least_l, 0.0},
      {8, "VCM structure", vcm_structure, 0.0},
      {9, "entropy root K", entropy_root, 0.0},
      {10, "two-solution profiles", two_solution_profiles, 0.0},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    if (only != 0 && c.id != only) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.time_limit > 0.0 && secs > c.time_limit) {
      o.pass = false;
      o.detail += " [over time limit " + num(c.time_limit, 4) + " s]";
    }
    if (!o.pass) ++failed;
    std::printf("%s criterion %2d  %-24s %7.2f s  %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, secs,
                o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d criteria failed\n", failed);
  return failed == 0 ? 0 : 1;
}
