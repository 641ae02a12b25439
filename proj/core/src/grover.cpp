#include "macroq/grover.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <ostream>
#include <set>
#include <stdexcept>

#include "macroq/format.hpp"
#include "macroq/random.hpp"

namespace macroq {

namespace {

// ceil() that does not bump a ratio sitting within rounding of an integer.
int robust_ceil(double x) {
  const double r = std::round(x);
  if (std::abs(x - r) < 1e-9) return static_cast<int>(r);
  return static_cast<int>(std::ceil(x));
}

}  // namespace

GroverInstance build_instance(int num_qubits, std::vector<BasisIndex> solutions) {
  if (num_qubits < 1 || num_qubits > kMaxQubits) {
    throw std::domain_error("qubit count " + std::to_string(num_qubits) + " outside [1, " +
                            std::to_string(kMaxQubits) + "]");
  }
  if (solutions.empty()) throw std::invalid_argument("solution set is empty");
  const std::uint64_t n = std::uint64_t{1} << num_qubits;
  std::sort(solutions.begin(), solutions.end());
  if (std::adjacent_find(solutions.begin(), solutions.end()) != solutions.end()) {
    throw std::invalid_argument("duplicate solution in solution set");
  }
  if (solutions.back() >= n) {
    throw std::out_of_range("solution " + std::to_string(solutions.back()) + " outside [0, 2^" +
                            std::to_string(num_qubits) + ")");
  }
  const std::uint64_t m = solutions.size();
  if (4 * m >= n) {
    throw std::domain_error("M = " + std::to_string(m) + " >= N/4 = " + std::to_string(n / 4) +
                            ": classically easy instance rejected");
  }

  GroverInstance inst;
  inst.num_qubits = num_qubits;
  inst.solutions = std::move(solutions);
  const double ratio = static_cast<double>(m) / static_cast<double>(n);
  inst.theta = 2.0 * std::asin(std::sqrt(ratio));
  inst.iterations = robust_ceil(std::acos(std::sqrt(ratio)) / inst.theta);
  return inst;
}

GroverInstance random_instance(int num_qubits, int num_solutions, std::uint64_t seed) {
  if (num_solutions < 1) throw std::invalid_argument("need at least one solution");
  if (num_qubits < 1 || num_qubits > kMaxQubits) {
    throw std::domain_error("qubit count " + std::to_string(num_qubits) + " out of range");
  }
  const std::uint64_t n = std::uint64_t{1} << num_qubits;
  if (4 * static_cast<std::uint64_t>(num_solutions) >= n) {
    throw std::domain_error("M >= N/4: classically easy instance rejected");
  }
  Rng rng(seed);
  std::set<BasisIndex> chosen;
  while (chosen.size() < static_cast<std::size_t>(num_solutions)) chosen.insert(rng.below(n));
  return build_instance(num_qubits, {chosen.begin(), chosen.end()});
}

std::pair<PureState, PureState> alpha_beta_states(const GroverInstance& inst) {
  const std::uint64_t n = inst.dim();
  const std::uint64_t m = inst.num_solutions();
  std::vector<cplx> alpha(n, 1.0 / std::sqrt(static_cast<double>(n - m)));
  std::vector<cplx> beta(n, 0.0);
  for (BasisIndex x : inst.solutions) {
    alpha[x] = 0.0;
    beta[x] = 1.0 / std::sqrt(static_cast<double>(m));
  }
  return {PureState(inst.num_qubits, std::move(alpha)), PureState(inst.num_qubits, std::move(beta))};
}

PureState closed_form_state(const GroverInstance& inst, int k) {
  if (k < 0 || k > inst.iterations) {
    throw std::out_of_range("iteration " + std::to_string(k) + " outside [0, R = " +
                            std::to_string(inst.iterations) + "]");
  }
  const double angle = 0.5 * (2.0 * k + 1.0) * inst.theta;
  const std::uint64_t n = inst.dim();
  const std::uint64_t m = inst.num_solutions();
  const double a = std::cos(angle) / std::sqrt(static_cast<double>(n - m));
  const double b = std::sin(angle) / std::sqrt(static_cast<double>(m));
  std::vector<cplx> amps(n, a);
  for (BasisIndex x : inst.solutions) amps[x] = b;
  return PureState(inst.num_qubits, std::move(amps));
}

void grover_iteration(PureState& state, const GroverInstance& inst) {
  apply_oracle(state, inst.solutions);
  hadamard_transform(state);
  apply_phase_shift(state);
  hadamard_transform(state);
}

int k_star(int iterations, double divisor) {
  if (!(divisor >= 1.0)) throw std::domain_error("k_star divisor must be >= 1");
  if (iterations < 0) throw std::domain_error("iteration count must be non-negative");
  return robust_ceil(iterations / divisor);
}

const char* step_label_name(StepLabel label) {
  switch (label) {
    case StepLabel::Init:
      return "INIT";
    case StepLabel::Hadamard:
      return "HT";
    case StepLabel::Oracle:
      return "ORACLE";
    case StepLabel::Phase:
      return "PHASE";
  }
  return "?";
}

StepTrace run_with_trace(const GroverInstance& inst, const StepProbe& probe) {
  StepTrace trace;
  trace.instance = inst;
  trace.total_steps = inst.total_steps();
  trace.records.reserve(static_cast<std::size_t>(trace.total_steps) + 1);

  PureState state(inst.num_qubits);
  long long step = 0;
  auto record = [&](StepLabel label) {
    trace.records.push_back({step, label, probe(state, step, label)});
    ++step;
  };
  auto hadamard_block = [&] {
    for (int site = 1; site <= inst.num_qubits; ++site) {
      apply_hadamard(state, site);
      record(StepLabel::Hadamard);
    }
  };

  try {
    record(StepLabel::Init);
    hadamard_block();
    for (int k = 0; k < inst.iterations; ++k) {
      apply_oracle(state, inst.solutions);
      record(StepLabel::Oracle);
      hadamard_block();
      apply_phase_shift(state);
      record(StepLabel::Phase);
      hadamard_block();
    }
  } catch (const std::exception& e) {
    trace.valid = false;
    trace.error = "probe failed at step " + std::to_string(step) + ": " + e.what();
  }
  return trace;
}

PureState run_schedule(const GroverInstance& inst) {
  PureState state(inst.num_qubits);
  hadamard_transform(state);
  for (int k = 0; k < inst.iterations; ++k) grover_iteration(state, inst);
  return state;
}

std::string format_solutions(const std::vector<BasisIndex>& solutions) {
  std::string out;
  for (std::size_t i = 0; i < solutions.size(); ++i) {
    if (i) out += ';';
    out += std::to_string(solutions[i]);
  }
  return out;
}

std::vector<BasisIndex> parse_solutions(const std::string& text) {
  std::vector<BasisIndex> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = text.find_first_of(",;", pos);
    const std::string tok = text.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
    BasisIndex v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size()) {
      throw std::invalid_argument("bad solution index '" + tok + "'");
    }
    out.push_back(v);
    if (end == std::string::npos) break;
    pos = end + 1;
  }
  return out;
}

void write_trace_csv(std::ostream& os, const StepTrace& trace) {
  const ClassicLocaleGuard classic(os);
  os << "# L=" << trace.instance.num_qubits << '\n'
     << "# solutions=" << format_solutions(trace.instance.solutions) << '\n'
     << "# R=" << trace.instance.iterations << '\n'
     << "# T_Q=" << trace.total_steps << '\n'
     << "step,label,e_max\n";
  for (const auto& r : trace.records) {
    os << r.step << ',' << step_label_name(r.label) << ',' << format_number(r.e_max) << '\n';
  }
}

}  // namespace macroq
