#include "macroq/analytic.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace macroq {

MxMoments grover_mx_moments(const GroverInstance& inst, int k) {
  if (k < 0 || k > inst.iterations) {
    throw std::out_of_range("iteration " + std::to_string(k) + " outside [0, R]");
  }
  MxMoments out;
  out.k = k;
  out.theta = inst.theta;
  const double half = 0.5 * (2.0 * k + 1.0) * inst.theta;
  out.mean_leading = std::cos(half) * std::cos(half);
  const double s = std::sin((2.0 * k + 1.0) * inst.theta);
  out.variance_leading = 0.25 * s * s;
  return out;
}

double family_variance_at_kstar(int num_sites, double divisor) {
  if (!(divisor >= 1.0)) throw std::domain_error("divisor must be >= 1");
  const double s = std::sin(std::numbers::pi / divisor);
  const double l = num_sites;
  return 0.25 * s * s * l * l;
}

Magnetization total_mx(int num_sites) {
  return {PauliAxis::X, std::vector<double>(num_sites, 1.0), 0.0};
}

Magnetization staggered_mz(int num_sites) {
  Magnetization m{PauliAxis::Z, std::vector<double>(num_sites), 0.0};
  for (int l = 1; l <= num_sites; ++l) m.weights[l - 1] = (l % 2 == 0) ? 1.0 : -1.0;
  return m;
}

Magnetization half_mx(int num_sites) {
  Magnetization m{PauliAxis::X, std::vector<double>(num_sites, 0.0), 0.0};
  for (int l = 1; l <= num_sites / 2; ++l) m.weights[l - 1] = 1.0;
  m.offset = num_sites - num_sites / 2;
  return m;
}

Moments magnetization_moments(const PureState& state, const Magnetization& op) {
  const int L = state.num_qubits();
  if (static_cast<int>(op.weights.size()) != L) {
    throw std::invalid_argument("magnetization weights do not match the state size");
  }
  PureState rotated = state;
  constexpr double r = 0.70710678118654752440;
  // H S^dagger maps sigma_y to sigma_z; H maps sigma_x to sigma_z.
  const cplx hsd[2][2] = {{r, cplx{0.0, -r}}, {r, cplx{0.0, r}}};
  for (int l = 1; l <= L; ++l) {
    if (op.weights[l - 1] == 0.0) continue;
    if (op.axis == PauliAxis::X) apply_hadamard(rotated, l);
    if (op.axis == PauliAxis::Y) apply_single_qubit(rotated, l, hsd);
  }
  const auto amps = rotated.amplitudes();
  double m1 = 0.0, m2 = 0.0;
  for (BasisIndex x = 0; x < amps.size(); ++x) {
    const double p = std::norm(amps[x]);
    if (p == 0.0) continue;
    double value = op.offset;
    for (int l = 1; l <= L; ++l) {
      const bool one = (x >> (L - l)) & 1U;
      value += op.weights[l - 1] * (one ? -1.0 : 1.0);
    }
    m1 += p * value;
    m2 += p * value * value;
  }
  return {m1, m2 - m1 * m1};
}

std::vector<double> mx_distribution(const PureState& state) {
  const int L = state.num_qubits();
  PureState rotated = state;
  hadamard_transform(rotated);
  std::vector<double> dist(L + 1, 0.0);
  const auto amps = rotated.amplitudes();
  for (BasisIndex x = 0; x < amps.size(); ++x) {
    // Bit 0 after H is a sigma_x = +1 site.
    const int plus = L - std::popcount(x);
    dist[plus] += std::norm(amps[x]);
  }
  return dist;
}

double upper_tail(const std::vector<double>& distribution, int j_min) {
  double s = 0.0;
  for (int j = std::max(0, j_min); j < static_cast<int>(distribution.size()); ++j) s += distribution[j];
  return s;
}

double entropy_gap(double k, double m) {
  auto xlogx = [](double v) { return v > 0.0 ? v * std::log(v) : 0.0; };
  return (1.0 - m) * std::numbers::ln2 + xlogx(k) + xlogx(1.0 - k);
}

double solve_K(double m) {
  if (!(m > 0.0 && m < 1.0)) throw std::domain_error("solve_K needs 0 < m < 1");
  // f(1/2) = -m log 2 < 0 and f -> (1 - m) log 2 > 0 as k -> 1; f is
  // increasing on [1/2, 1).
  double lo = 0.5;
  double hi = 1.0;
  for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (entropy_gap(mid, m) < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

namespace {

void check_sqrtN_size(int num_sites) {
  if (num_sites % 2 != 0) throw std::domain_error("sqrt(N) construction needs even L");
  if (num_sites < 4 || num_sites > 20) {
    throw std::domain_error("sqrt(N) construction supports 4 <= L <= 20");
  }
}

std::pair<GroverInstance, PureState> with_beta(GroverInstance inst) {
  auto states = alpha_beta_states(inst);
  return {std::move(inst), std::move(states.second)};
}

}  // namespace

std::pair<GroverInstance, PureState> beta_sqrtN_construction(int num_sites) {
  check_sqrtN_size(num_sites);
  const BasisIndex root = BasisIndex{1} << (num_sites / 2);
  const BasisIndex half = root / 2;
  std::vector<BasisIndex> sols;
  for (BasisIndex j = 1; j <= half; ++j) sols.push_back(j);
  for (BasisIndex z = 0; z < half; ++z) sols.push_back(z * 2 * root);
  return with_beta(build_instance(num_sites, std::move(sols)));
}

std::pair<GroverInstance, PureState> beta_contiguous_construction(int num_sites) {
  check_sqrtN_size(num_sites);
  const BasisIndex root = BasisIndex{1} << (num_sites / 2);
  std::vector<BasisIndex> sols;
  for (BasisIndex j = 1; j <= root; ++j) sols.push_back(j);
  return with_beta(build_instance(num_sites, std::move(sols)));
}

SpeedupCounts speedup_counts(int num_sites, double m) {
  if (!(m >= 0.0 && m < 1.0)) throw std::domain_error("speedup_counts needs 0 <= m < 1");
  const double c = std::exp2((1.0 - m) * num_sites);
  return {c, std::sqrt(c)};
}

}  // namespace macroq
