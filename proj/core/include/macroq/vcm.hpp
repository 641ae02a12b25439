// Variance-covariance matrix (VCM) of Pauli correlators and the additive
// operators built from it.
//
// For a pure state on L qubits the VCM is the 3L x 3L Hermitian matrix
//
//   V[(l,a),(l',a')] = <sigma_a(l) sigma_a'(l')> - <sigma_a(l)><sigma_a'(l')>
//
// indexed site-major: row 3(l-1) + a for a in {x, y, z}. Its largest
// eigenvalue e_max bounds the fluctuation of every additive operator whose
// coefficient table has total weight L, and e_max(L) ~ L^(p_e - 1) over a
// family of states defines the index p_e. p_e = 2 flags a superposition of
// macroscopically distinct states.

#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "macroq/linalg.hpp"
#include "macroq/statevector.hpp"

namespace macroq {

/// Top-eigenvalue gaps below this are reported as degenerate.
inline constexpr double kDegeneracyGap = 1e-8;

struct Vcm {
  int num_sites = 0;
  CMatrix entries;                  ///< 3L x 3L, site-major
  std::vector<double> eigenvalues;  ///< ascending
  double e_max = 0.0;
  /// Eigenvector of e_max scaled so sum |c|^2 = L, with its largest-magnitude
  /// component made real and positive.
  std::vector<cplx> top_eigvec;
  bool degenerate = false;

  std::size_t dim() const noexcept { return entries.rows(); }
  double trace() const { return entries.trace().real(); }
  double min_eigenvalue() const { return eigenvalues.empty() ? 0.0 : eigenvalues.front(); }
  double top_gap() const;
};

/// Row/column of (site, axis) in the VCM; site is 1-based.
inline std::size_t vcm_index(int site, PauliAxis axis) {
  return 3 * static_cast<std::size_t>(site - 1) + static_cast<std::size_t>(axis);
}

struct VcmOptions {
  /// Worker threads for the correlator pass; 0 means hardware concurrency.
  unsigned threads = 1;
  /// Allowed |norm - 1| of the input state.
  double norm_tolerance = 1e-10;
};

/// Builds the VCM from one- and two-site reduced density matrices and
/// diagonalizes it. Throws std::domain_error for non-normalized input.
Vcm compute_vcm(const PureState& state, const VcmOptions& options = {});

/// Only the correlator matrix, without the eigendecomposition.
CMatrix vcm_matrix(const PureState& state, const VcmOptions& options = {});

/// Fills the spectral fields of a VCM whose entries are already set.
void diagonalize(Vcm& vcm);

/// Structural checks every VCM of a normalized pure state must pass:
/// Hermitian, positive semidefinite, 2L <= trace <= 3L, 2/3 <= e_max <= 3L.
struct VcmInvariants {
  double hermiticity_error = 0.0;
  double min_eigenvalue = 0.0;
  double trace = 0.0;
  double e_max = 0.0;
  bool ok = true;
  std::string violation;  ///< first failed check, empty when ok
};
VcmInvariants check_vcm_invariants(const Vcm& vcm, double tolerance = 1e-9);

enum class Normalization {
  SumL,     ///< sum over all (l, a) of |c|^2 equals L
  PerSite,  ///< sum over a of |c_{l a}|^2 <= 1 for every site
};

/// Coefficient table c_{l a} of an additive fluctuation operator
///   dA = sum_l sum_a c_{l a} (sigma_a(l) - <sigma_a(l)>).
struct AdditiveOperatorCoeffs {
  int num_sites = 0;
  std::vector<cplx> coeffs;  ///< 3L entries, site-major like the VCM
  Normalization normalization = Normalization::SumL;
  /// Identity shifts beta(l) that complete each local operator to unit norm
  /// (see reconstruct_local_operators); empty when not computed.
  std::vector<double> identity_offsets;
  bool degenerate = false;

  cplx& at(int site, PauliAxis axis) { return coeffs[vcm_index(site, axis)]; }
  const cplx& at(int site, PauliAxis axis) const { return coeffs[vcm_index(site, axis)]; }

  double site_weight(int site) const;
  double total_weight() const;
  /// Throws std::domain_error unless the declared normalization holds.
  void check_normalization(double tolerance = 1e-10) const;
};

/// Uniform table on one axis: c_{l a} = sign(l) for every site, where
/// sign(l) = +1 or (staggered) (-1)^l.
AdditiveOperatorCoeffs uniform_axis_operator(int num_sites, PauliAxis axis,
                                             bool staggered = false);

/// Top eigenvector of the VCM as a SumL-normalized coefficient table.
AdditiveOperatorCoeffs max_fluctuating_operator(const Vcm& vcm);

/// Largest per-site weight max_l sum_a |c_{l a}|^2 of a SumL table.
double c_factor(const AdditiveOperatorCoeffs& coeffs);

/// Divides a SumL table by sqrt(C) so every site weight is at most one;
/// the fluctuation drops from e_max L to e_max L / C.
AdditiveOperatorCoeffs to_per_site(const AdditiveOperatorCoeffs& coeffs);

/// Unit-norm completion of the local operators of a fluctuation operator:
/// a(l) = scale * sum_a c_{l a} sigma_a + offsets[l] * 1 with
/// Tr(a(l)^dagger a(l)) / 2 = 1 on every site. The scale is the largest
/// admissible one, 1/sqrt(max_l w_l), which makes each |offsets[l]| minimal.
struct LocalOperatorCompletion {
  double scale = 0.0;
  std::vector<double> offsets;
};
LocalOperatorCompletion reconstruct_local_operators(const AdditiveOperatorCoeffs& coeffs);

/// c^dagger V c.
double quadratic_fluctuation(const Vcm& vcm, const AdditiveOperatorCoeffs& coeffs);

/// <dA^dagger dA> evaluated directly on the statevector by applying dA to
/// |psi>; independent of the VCM.
double fluctuation_of(const PureState& state, const AdditiveOperatorCoeffs& coeffs);

struct BruteForceOptions {
  /// Total number of ascent starts (the budget); must be positive.
  int restarts = 32;
  int iterations = 500;
  std::uint64_t seed = 0x6d61637271ULL;
  /// Seeds the search with the per-site renormalized top eigenvector.
  bool eigenvector_start = true;
  /// Seeds the search with the sign-chosen sum of per-site optimal local
  /// operators, which always reaches a fluctuation of at least L.
  bool greedy_start = true;
  /// Explicit starts, used before the eigenvector/greedy/random ones.
  std::vector<AdditiveOperatorCoeffs> extra_starts;
  unsigned threads = 1;
};

struct BruteForceResult {
  /// Best fluctuation over complex (possibly non-Hermitian) local operators,
  /// re-evaluated on the statevector.
  double best = 0.0;
  AdditiveOperatorCoeffs best_coeffs;
  /// Best fluctuation when the coefficients are restricted to be real
  /// (Hermitian local operators).
  double hermitian_best = 0.0;
  /// Fluctuation of the eigenvector start, e_max L / C.
  double eigenvector_start_value = 0.0;
  int starts = 0;
};

inline constexpr int kBruteForceMaxSites = 12;

/// Multi-start projected gradient ascent of <dA^dagger dA> over PerSite
/// tables. Requires L <= 12.
BruteForceResult brute_force_max_fluctuation(const PureState& state,
                                             const BruteForceOptions& options = {});

/// Runs the ascent from a single start on an already computed VCM; returns
/// the final objective and leaves the maximizer in `coeffs`.
double projected_ascent(const CMatrix& vcm, std::vector<cplx>& coeffs, int iterations,
                        bool real_coefficients = false);

// VCM dump: CSV rows `l,alpha,lp,alphap,re,im` and a JSON summary.
void write_vcm_csv(std::ostream& os, const Vcm& vcm);
void write_vcm_summary_json(std::ostream& os, const Vcm& vcm);

}  // namespace macroq
