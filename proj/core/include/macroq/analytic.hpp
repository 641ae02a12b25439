// Closed-form Grover moments and the helpers used to check them against
// simulated states.

#pragma once

#include <utility>
#include <vector>

#include "macroq/grover.hpp"
#include "macroq/statevector.hpp"

namespace macroq {

/// Leading-order moments of M_x = sum_l sigma_x(l) on |psi_k>:
///   <M_x>       = cos^2((2k+1) theta / 2) L + O(1)
///   <(dM_x)^2>  = (1/4) sin^2((2k+1) theta) L^2 + O(L)
struct MxMoments {
  int k = 0;
  double theta = 0.0;
  double mean_leading = 0.0;      ///< coefficient of L
  double variance_leading = 0.0;  ///< coefficient of L^2, in [0, 1/4]
};

MxMoments grover_mx_moments(const GroverInstance& inst, int k);

/// (1/4) sin^2(pi / s) L^2: leading variance of M_x at k* = ceil(R/s).
double family_variance_at_kstar(int num_sites, double divisor);

/// A weighted single-axis magnetization sum_l w_l sigma_axis(l) + offset.
struct Magnetization {
  PauliAxis axis = PauliAxis::X;
  std::vector<double> weights;  ///< per site, 1-based site l at index l-1
  double offset = 0.0;          ///< multiple of the identity
};

/// M_x = sum_l sigma_x(l).
Magnetization total_mx(int num_sites);
/// M_z^st = sum_l (-1)^l sigma_z(l).
Magnetization staggered_mz(int num_sites);
/// M'_x = sum_{l <= L/2} sigma_x(l) + sum_{l > L/2} 1.
Magnetization half_mx(int num_sites);

struct Moments {
  double mean = 0.0;
  double variance = 0.0;
};

/// Exact mean and variance on the statevector (each weighted site is
/// rotated into the z basis, where the operator is diagonal).
Moments magnetization_moments(const PureState& state, const Magnetization& op);

/// P(M_x = -L + 2j) for j = 0..L.
std::vector<double> mx_distribution(const PureState& state);

/// sum_{j >= j_min} P(M_x = -L + 2j).
double upper_tail(const std::vector<double>& distribution, int j_min);

/// f(k) = (1 - m) log 2 + k log k + (1 - k) log(1 - k).
double entropy_gap(double k, double m);

/// Root K in (1/2, 1) of entropy_gap(K, m) = 0 by bisection; 0 < m < 1.
double solve_K(double m);

/// M = sqrt(N) instance with x_j = j for j = 1..sqrt(N)/2 and x_j the
/// multiples z * 2 sqrt(N), z = 0..sqrt(N)/2 - 1. Its |beta> is close to
/// (|0..0 ->..->> + |->..-> 0..0>)/sqrt(2). Requires even L in [4, 20].
std::pair<GroverInstance, PureState> beta_sqrtN_construction(int num_sites);

/// Same M with x_j = j for every j; |beta> is close to a product state.
std::pair<GroverInstance, PureState> beta_contiguous_construction(int num_sites);

struct SpeedupCounts {
  double classical = 0.0;  ///< 2^((1-m) L)
  double quantum = 0.0;    ///< sqrt(2^((1-m) L))
};

/// Requires 0 <= m < 1.
SpeedupCounts speedup_counts(int num_sites, double m);

}  // namespace macroq
