// Grover search on an L-qubit index register.
//
// The search rotates |psi_0> = H^L|0...0> = cos(theta/2)|alpha> +
// sin(theta/2)|beta> towards |beta>, the uniform superposition of the M
// solutions, by theta per iteration; cos(theta/2) = sqrt((N - M)/N).
// Gate-level schedule (one recorded step per gate):
//
//   INIT, L x HT, then R times [ORACLE, L x HT, PHASE, L x HT]
//
// for T_Q = L + (2L + 2) R steps after the initial state.

#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "macroq/statevector.hpp"

namespace macroq {

struct GroverInstance {
  int num_qubits = 0;
  std::vector<BasisIndex> solutions;  ///< sorted, distinct
  double theta = 0.0;
  int iterations = 0;  ///< R

  std::uint64_t dim() const noexcept { return std::uint64_t{1} << num_qubits; }
  std::size_t num_solutions() const noexcept { return solutions.size(); }
  /// T_Q = L + (2L + 2) R.
  long long total_steps() const noexcept {
    return num_qubits + static_cast<long long>(2 * num_qubits + 2) * iterations;
  }
};

/// Validates the solution set (nonempty, distinct, in range, 4M < N) and
/// derives theta and R = ceil(arccos(sqrt(M/N)) / theta).
GroverInstance build_instance(int num_qubits, std::vector<BasisIndex> solutions);

/// M distinct solutions drawn uniformly without replacement.
GroverInstance random_instance(int num_qubits, int num_solutions, std::uint64_t seed);

/// (|alpha>, |beta>): uniform over non-solutions and over solutions.
std::pair<PureState, PureState> alpha_beta_states(const GroverInstance& inst);

/// cos((2k+1) theta / 2)|alpha> + sin((2k+1) theta / 2)|beta>, 0 <= k <= R.
PureState closed_form_state(const GroverInstance& inst, int k);

/// Oracle, HT, phase shift, HT.
void grover_iteration(PureState& state, const GroverInstance& inst);

/// ceil(R / s) for s >= 1.
int k_star(int iterations, double divisor);

enum class StepLabel { Init, Hadamard, Oracle, Phase };

const char* step_label_name(StepLabel label);

struct StepRecord {
  long long step = 0;
  StepLabel label = StepLabel::Init;
  double e_max = 0.0;
};

struct StepTrace {
  GroverInstance instance;
  std::vector<StepRecord> records;
  long long total_steps = 0;
  bool valid = true;
  std::string error;  ///< probe failure message when !valid
};

/// Called after every schedule step with a read-only view of the register;
/// returns the recorded value (normally the VCM e_max).
using StepProbe = std::function<double(const PureState&, long long step, StepLabel label)>;

/// Runs the full gate schedule from |0...0>. A throwing probe stops the run
/// and returns the partial trace with valid = false.
StepTrace run_with_trace(const GroverInstance& inst, const StepProbe& probe);

/// The register after the full schedule, without probing.
PureState run_schedule(const GroverInstance& inst);

/// Solution list as "a;b;c".
std::string format_solutions(const std::vector<BasisIndex>& solutions);
/// Parses "a,b,c" or "a;b;c".
std::vector<BasisIndex> parse_solutions(const std::string& text);

// Trace CSV: `# L=`, `# solutions=`, `# R=`, `# T_Q=` comment lines, then
// `step,label,e_max` with e_max at 12 significant digits.
void write_trace_csv(std::ostream& os, const StepTrace& trace);

}  // namespace macroq
