#include "macroq/vcm.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

#include "macroq/format.hpp"
#include "macroq/parallel.hpp"
#include "macroq/random.hpp"

namespace macroq {

namespace {

constexpr cplx kI{0.0, 1.0};

using Pauli2 = std::array<std::array<cplx, 2>, 2>;

constexpr Pauli2 pauli_matrix(int axis) {
  switch (axis) {
    case 0:
      return {{{0.0, 1.0}, {1.0, 0.0}}};
    case 1:
      return {{{0.0, cplx{0.0, -1.0}}, {cplx{0.0, 1.0}, 0.0}}};
    default:
      return {{{1.0, 0.0}, {0.0, -1.0}}};
  }
}

// <sigma_a> for every site from one-site reduced density matrices.
std::vector<std::array<double, 3>> single_site_expectations(const PureState& state) {
  const int L = state.num_qubits();
  const auto amps = state.amplitudes();
  std::vector<std::array<double, 3>> out(L);
  for (int site = 1; site <= L; ++site) {
    const BasisIndex mask = BasisIndex{1} << state.bit_of_site(site);
    double r00 = 0.0, r11 = 0.0;
    cplx r01 = 0.0;
    for (BasisIndex x = 0; x < amps.size(); ++x) {
      if (x & mask) continue;
      const cplx a0 = amps[x];
      const cplx a1 = amps[x | mask];
      r00 += std::norm(a0);
      r11 += std::norm(a1);
      r01 += a0 * std::conj(a1);
    }
    out[site - 1] = {2.0 * r01.real(), -2.0 * r01.imag(), r00 - r11};
  }
  return out;
}

// Real <sigma_a(l) sigma_b(l')> for l < l' from the two-site reduced density
// matrix rho[(i j), (k m)] with i, k on site l and j, m on site l'.
std::array<std::array<double, 3>, 3> two_site_correlators(const PureState& state, int l, int lp) {
  const int bit_hi = state.bit_of_site(l);
  const int bit_lo = state.bit_of_site(lp);
  const BasisIndex mhi = BasisIndex{1} << bit_hi;
  const BasisIndex mlo = BasisIndex{1} << bit_lo;
  const auto amps = state.amplitudes();
  const BasisIndex rest = amps.size() >> 2;

  // Sums over the indices with both bits clear, walked as contiguous runs of
  // length 2^bit_lo so the inner loop is plain real arithmetic.
  const double* a = reinterpret_cast<const double*>(amps.data());
  const BasisIndex run = mlo;
  const BasisIndex mid_count = mhi >> (bit_lo + 1);
  const BasisIndex top_count = rest / (run * mid_count);
  double d0 = 0, d1 = 0, d2 = 0, d3 = 0;
  double o01r = 0, o01i = 0, o02r = 0, o02i = 0, o03r = 0, o03i = 0;
  double o12r = 0, o12i = 0, o13r = 0, o13i = 0, o23r = 0, o23i = 0;
  for (BasisIndex t = 0; t < top_count; ++t) {
    for (BasisIndex m = 0; m < mid_count; ++m) {
      const BasisIndex x0 = ((t << (bit_hi + 1)) | (m << (bit_lo + 1)));
      for (BasisIndex r = 0; r < run; ++r) {
        const BasisIndex x = x0 | r;
        const double r0 = a[2 * x], i0 = a[2 * x + 1];
        const double r1 = a[2 * (x | mlo)], i1 = a[2 * (x | mlo) + 1];
        const double r2 = a[2 * (x | mhi)], i2 = a[2 * (x | mhi) + 1];
        const double r3 = a[2 * (x | mhi | mlo)], i3 = a[2 * (x | mhi | mlo) + 1];
        d0 += r0 * r0 + i0 * i0;
        d1 += r1 * r1 + i1 * i1;
        d2 += r2 * r2 + i2 * i2;
        d3 += r3 * r3 + i3 * i3;
        // a_p conj(a_q) = (rp rq + ip iq) + i (ip rq - rp iq)
        o01r += r0 * r1 + i0 * i1;
        o01i += i0 * r1 - r0 * i1;
        o02r += r0 * r2 + i0 * i2;
        o02i += i0 * r2 - r0 * i2;
        o03r += r0 * r3 + i0 * i3;
        o03i += i0 * r3 - r0 * i3;
        o12r += r1 * r2 + i1 * i2;
        o12i += i1 * r2 - r1 * i2;
        o13r += r1 * r3 + i1 * i3;
        o13i += i1 * r3 - r1 * i3;
        o23r += r2 * r3 + i2 * i3;
        o23i += i2 * r3 - r2 * i3;
      }
    }
  }
  const std::array<double, 4> diag{d0, d1, d2, d3};
  const std::array<cplx, 6> off{cplx{o01r, o01i}, cplx{o02r, o02i}, cplx{o03r, o03i},
                                cplx{o12r, o12i}, cplx{o13r, o13i}, cplx{o23r, o23i}};

  std::array<std::array<cplx, 4>, 4> rho{};
  for (int i = 0; i < 4; ++i) rho[i][i] = diag[i];
  const int pairs[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  for (int k = 0; k < 6; ++k) {
    rho[pairs[k][0]][pairs[k][1]] = off[k];
    rho[pairs[k][1]][pairs[k][0]] = std::conj(off[k]);
  }

  std::array<std::array<double, 3>, 3> out{};
  for (int a = 0; a < 3; ++a) {
    const Pauli2 sa = pauli_matrix(a);
    for (int b = 0; b < 3; ++b) {
      const Pauli2 sb = pauli_matrix(b);
      // Tr(rho (sa x sb)) = sum rho[(ij),(km)] sa[k][i] sb[m][j].
      cplx t = 0.0;
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
          for (int k = 0; k < 2; ++k)
            for (int m = 0; m < 2; ++m) t += rho[2 * i + j][2 * k + m] * sa[k][i] * sb[m][j];
      out[a][b] = t.real();
    }
  }
  return out;
}

void check_normalized(const PureState& state, double tolerance) {
  const double n2 = state.norm_squared();
  if (std::abs(n2 - 1.0) > tolerance) {
    throw std::domain_error("state is not normalized (norm^2 = " + format_number(n2) + ")");
  }
}

std::vector<cplx> random_per_site(int num_sites, Rng& rng, bool real) {
  std::vector<cplx> c(3 * static_cast<std::size_t>(num_sites));
  for (int l = 0; l < num_sites; ++l) {
    double w = 0.0;
    for (int a = 0; a < 3; ++a) {
      const double re = rng.normal();
      const double im = real ? 0.0 : rng.normal();
      c[3 * l + a] = {re, im};
      w += re * re + im * im;
    }
    const double s = w > 0.0 ? 1.0 / std::sqrt(w) : 0.0;
    for (int a = 0; a < 3; ++a) c[3 * l + a] *= s;
  }
  return c;
}

// Scales each site block down onto the unit ball.
void project_per_site(std::vector<cplx>& c) {
  for (std::size_t base = 0; base < c.size(); base += 3) {
    const double w = std::norm(c[base]) + std::norm(c[base + 1]) + std::norm(c[base + 2]);
    if (w > 1.0) {
      const double s = 1.0 / std::sqrt(w);
      for (int a = 0; a < 3; ++a) c[base + a] *= s;
    }
  }
}

double objective(const CMatrix& v, const std::vector<cplx>& c) {
  return quadratic_form(v, c).real();
}

double ascend(const CMatrix& v, std::vector<cplx>& c, int iterations, bool real, Rng& rng) {
  if (real)
    for (auto& z : c) z = z.real();
  project_per_site(c);
  double f = objective(v, c);
  double step = 1.0;
  for (int it = 0; it < iterations; ++it) {
    auto g = v * std::span<const cplx>(c);
    double gnorm = 0.0;
    for (auto& z : g) {
      if (real) z = z.real();
      gnorm += std::norm(z);
    }
    if (gnorm < 1e-24) {
      // Stationary point (e.g. a zero-fluctuation start): kick it.
      for (auto& z : g) z = cplx{rng.normal(), real ? 0.0 : rng.normal()} * 1e-3;
    }
    std::vector<cplx> trial(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) trial[i] = c[i] + step * g[i];
    project_per_site(trial);
    const double ft = objective(v, trial);
    if (ft > f + 1e-15 * std::max(1.0, std::abs(f)) || (gnorm < 1e-24 && ft >= f)) {
      c = std::move(trial);
      f = ft;
      step = std::min(step * 2.0, 1e8);
    } else {
      step *= 0.5;
      if (step < 1e-12) break;
    }
  }
  return f;
}

// Sum of per-site optimal local operators with signs chosen site by site so
// every cross term is non-negative; the fluctuation is at least sum_l
// lambda_max(V_l) >= L.
std::vector<cplx> greedy_start(const Vcm& vcm) {
  const int L = vcm.num_sites;
  std::vector<cplx> c(3 * static_cast<std::size_t>(L));
  for (int l = 0; l < L; ++l) {
    CMatrix block(3, 3);
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) block(a, b) = vcm.entries(3 * l + a, 3 * l + b);
    const auto eig = hermitian_eigen(block);
    std::array<cplx, 3> u{eig.vectors(0, 2), eig.vectors(1, 2), eig.vectors(2, 2)};
    double cross = 0.0;
    for (int a = 0; a < 3; ++a) {
      cplx col = 0.0;
      for (std::size_t k = 0; k < 3 * static_cast<std::size_t>(l); ++k)
        col += std::conj(c[k]) * vcm.entries(k, 3 * l + a);
      cross += 2.0 * (col * u[a]).real();
    }
    const double sign = cross < 0.0 ? -1.0 : 1.0;
    for (int a = 0; a < 3; ++a) c[3 * l + a] = sign * u[a];
  }
  return c;
}

}  // namespace

double Vcm::top_gap() const {
  if (eigenvalues.size() < 2) return INFINITY;
  return eigenvalues[eigenvalues.size() - 1] - eigenvalues[eigenvalues.size() - 2];
}

CMatrix vcm_matrix(const PureState& state, const VcmOptions& options) {
  check_normalized(state, options.norm_tolerance);
  const int L = state.num_qubits();
  const auto e = single_site_expectations(state);
  CMatrix v(3 * static_cast<std::size_t>(L), 3 * static_cast<std::size_t>(L));

  // Same-site block: sigma_a sigma_b = delta_ab + i eps_abc sigma_c.
  for (int l = 1; l <= L; ++l) {
    const auto& el = e[l - 1];
    for (int a = 0; a < 3; ++a) {
      for (int b = 0; b < 3; ++b) {
        cplx prod = a == b ? 1.0 : 0.0;
        if (a != b) {
          const int c = 3 - a - b;
          const double eps = (b == (a + 1) % 3) ? 1.0 : -1.0;
          prod = kI * eps * el[c];
        }
        v(vcm_index(l, axis_from_index(a)), vcm_index(l, axis_from_index(b))) =
            prod - el[a] * el[b];
      }
    }
  }

  std::vector<std::pair<int, int>> pairs;
  for (int l = 1; l <= L; ++l)
    for (int lp = l + 1; lp <= L; ++lp) pairs.emplace_back(l, lp);

  parallel_for(pairs.size(), options.threads, [&](std::size_t k) {
    const auto [l, lp] = pairs[k];
    const auto corr = two_site_correlators(state, l, lp);
    for (int a = 0; a < 3; ++a) {
      for (int b = 0; b < 3; ++b) {
        const double val = corr[a][b] - e[l - 1][a] * e[lp - 1][b];
        v(vcm_index(l, axis_from_index(a)), vcm_index(lp, axis_from_index(b))) = val;
        v(vcm_index(lp, axis_from_index(b)), vcm_index(l, axis_from_index(a))) = val;
      }
    }
  });
  return v;
}

void diagonalize(Vcm& vcm) {
  const auto eig = hermitian_eigen(vcm.entries);
  const std::size_t n = eig.values.size();
  vcm.eigenvalues = eig.values;
  vcm.e_max = eig.values.back();
  vcm.degenerate = n >= 2 && vcm.top_gap() < kDegeneracyGap;

  auto top = eig.vectors.column(n - 1);
  std::size_t pivot = 0;
  double best = -1.0;
  for (std::size_t i = 0; i < n; ++i) {
    // First component within rounding of the maximum wins ties.
    if (std::abs(top[i]) > best * (1.0 + 1e-9)) {
      best = std::abs(top[i]);
      pivot = i;
    }
  }
  const cplx phase = std::conj(top[pivot]) / std::abs(top[pivot]);
  const double scale = std::sqrt(static_cast<double>(vcm.num_sites));
  for (auto& z : top) z *= phase * scale;
  top[pivot] = top[pivot].real();
  vcm.top_eigvec = std::move(top);
}

VcmInvariants check_vcm_invariants(const Vcm& vcm, double tolerance) {
  VcmInvariants r;
  const double L = vcm.num_sites;
  r.hermiticity_error = vcm.entries.hermiticity_error();
  r.min_eigenvalue = vcm.min_eigenvalue();
  r.trace = vcm.trace();
  r.e_max = vcm.e_max;
  auto fail = [&](const std::string& what) {
    if (r.ok) r.violation = what;
    r.ok = false;
  };
  if (r.hermiticity_error > tolerance) fail("not Hermitian: " + format_number(r.hermiticity_error));
  if (r.min_eigenvalue < -tolerance) fail("negative eigenvalue " + format_number(r.min_eigenvalue));
  if (r.trace < 2.0 * L - tolerance || r.trace > 3.0 * L + tolerance) {
    fail("trace " + format_number(r.trace) + " outside [2L, 3L]");
  }
  if (r.e_max < 2.0 / 3.0 - tolerance || r.e_max > 3.0 * L + tolerance) {
    fail("e_max " + format_number(r.e_max) + " outside [2/3, 3L]");
  }
  return r;
}

Vcm compute_vcm(const PureState& state, const VcmOptions& options) {
  Vcm vcm;
  vcm.num_sites = state.num_qubits();
  vcm.entries = vcm_matrix(state, options);
  diagonalize(vcm);
  return vcm;
}

double AdditiveOperatorCoeffs::site_weight(int site) const {
  double w = 0.0;
  for (auto axis : kPauliAxes) w += std::norm(at(site, axis));
  return w;
}

double AdditiveOperatorCoeffs::total_weight() const {
  double w = 0.0;
  for (const auto& z : coeffs) w += std::norm(z);
  return w;
}

void AdditiveOperatorCoeffs::check_normalization(double tolerance) const {
  if (coeffs.size() != 3 * static_cast<std::size_t>(num_sites)) {
    throw std::domain_error("coefficient table has the wrong size");
  }
  if (normalization == Normalization::SumL) {
    const double w = total_weight();
    if (std::abs(w - num_sites) > tolerance * std::max(1, num_sites)) {
      throw std::domain_error("SumL table has total weight " + format_number(w));
    }
  } else {
    for (int l = 1; l <= num_sites; ++l) {
      if (site_weight(l) > 1.0 + tolerance) {
        throw std::domain_error("PerSite table exceeds unit weight at site " + std::to_string(l));
      }
    }
  }
}

AdditiveOperatorCoeffs uniform_axis_operator(int num_sites, PauliAxis axis, bool staggered) {
  AdditiveOperatorCoeffs op;
  op.num_sites = num_sites;
  op.coeffs.assign(3 * static_cast<std::size_t>(num_sites), cplx{});
  for (int l = 1; l <= num_sites; ++l) op.at(l, axis) = (staggered && (l % 2 == 1)) ? -1.0 : 1.0;
  op.normalization = Normalization::SumL;
  return op;
}

AdditiveOperatorCoeffs max_fluctuating_operator(const Vcm& vcm) {
  if (vcm.top_eigvec.empty()) throw std::invalid_argument("VCM has not been diagonalized");
  AdditiveOperatorCoeffs op;
  op.num_sites = vcm.num_sites;
  op.coeffs = vcm.top_eigvec;
  op.normalization = Normalization::SumL;
  op.degenerate = vcm.degenerate;
  return op;
}

double c_factor(const AdditiveOperatorCoeffs& coeffs) {
  double c = 0.0;
  for (int l = 1; l <= coeffs.num_sites; ++l) c = std::max(c, coeffs.site_weight(l));
  return c;
}

LocalOperatorCompletion reconstruct_local_operators(const AdditiveOperatorCoeffs& coeffs) {
  LocalOperatorCompletion out;
  const double wmax = c_factor(coeffs);
  out.scale = wmax > 0.0 ? 1.0 / std::sqrt(wmax) : 0.0;
  out.offsets.resize(coeffs.num_sites);
  for (int l = 1; l <= coeffs.num_sites; ++l) {
    const double rest = 1.0 - out.scale * out.scale * coeffs.site_weight(l);
    out.offsets[l - 1] = std::sqrt(std::max(0.0, rest));
  }
  return out;
}

AdditiveOperatorCoeffs to_per_site(const AdditiveOperatorCoeffs& coeffs) {
  const double c = c_factor(coeffs);
  if (c <= 0.0) throw std::domain_error("to_per_site: all coefficients vanish");
  AdditiveOperatorCoeffs out = coeffs;
  const double s = 1.0 / std::sqrt(c);
  for (auto& z : out.coeffs) z *= s;
  out.normalization = Normalization::PerSite;
  out.identity_offsets = reconstruct_local_operators(out).offsets;
  return out;
}

double quadratic_fluctuation(const Vcm& vcm, const AdditiveOperatorCoeffs& coeffs) {
  return quadratic_form(vcm.entries, coeffs.coeffs).real();
}

double fluctuation_of(const PureState& state, const AdditiveOperatorCoeffs& coeffs) {
  const int L = state.num_qubits();
  if (coeffs.num_sites != L || coeffs.coeffs.size() != 3 * static_cast<std::size_t>(L)) {
    throw std::invalid_argument("coefficient table does not match the state size");
  }
  const auto amps = state.amplitudes();
  std::vector<cplx> phi(amps.size());
  std::vector<cplx> scratch;
  for (int l = 1; l <= L; ++l) {
    for (auto axis : kPauliAxes) {
      const cplx c = coeffs.at(l, axis);
      if (c == cplx{}) continue;
      const double mean = pauli_expectation(state, l, axis);
      apply_pauli(state, l, axis, scratch);
      for (std::size_t x = 0; x < amps.size(); ++x) phi[x] += c * (scratch[x] - mean * amps[x]);
    }
  }
  double n2 = 0.0;
  for (const auto& z : phi) n2 += std::norm(z);
  return n2;
}

double projected_ascent(const CMatrix& vcm, std::vector<cplx>& coeffs, int iterations,
                        bool real_coefficients) {
  Rng rng(0x61736365ULL);
  return ascend(vcm, coeffs, iterations, real_coefficients, rng);
}

BruteForceResult brute_force_max_fluctuation(const PureState& state,
                                             const BruteForceOptions& options) {
  const int L = state.num_qubits();
  if (options.restarts <= 0) throw std::invalid_argument("brute force budget must be positive");
  if (L > kBruteForceMaxSites) {
    throw std::domain_error("brute-force oracle is limited to L <= " +
                            std::to_string(kBruteForceMaxSites));
  }
  const Vcm vcm = compute_vcm(state);

  std::vector<std::vector<cplx>> starts;
  for (const auto& s : options.extra_starts) {
    if (s.num_sites != L) throw std::invalid_argument("extra start has the wrong size");
    starts.push_back(s.coeffs);
  }
  double eigen_value = 0.0;
  if (options.eigenvector_start) {
    const auto per_site = to_per_site(max_fluctuating_operator(vcm));
    eigen_value = quadratic_fluctuation(vcm, per_site);
    starts.push_back(per_site.coeffs);
  }
  if (options.greedy_start) starts.push_back(greedy_start(vcm));
  if (static_cast<int>(starts.size()) > options.restarts) starts.resize(options.restarts);
  for (int k = static_cast<int>(starts.size()); k < options.restarts; ++k) {
    Rng rng(derive_seed(options.seed, 0x7374617274ULL, k));
    starts.push_back(random_per_site(L, rng, false));
  }

  std::vector<std::vector<cplx>> complex_best(starts.size());
  std::vector<double> complex_value(starts.size());
  std::vector<double> real_value(starts.size());
  parallel_for(starts.size(), options.threads, [&](std::size_t k) {
    Rng rng(derive_seed(options.seed, 0x6b69636bULL, k));
    auto c = starts[k];
    complex_value[k] = ascend(vcm.entries, c, options.iterations, false, rng);
    complex_best[k] = std::move(c);
    auto r = starts[k];
    real_value[k] = ascend(vcm.entries, r, options.iterations, true, rng);
  });

  const auto best_it = std::max_element(complex_value.begin(), complex_value.end());
  const std::size_t best_k = static_cast<std::size_t>(best_it - complex_value.begin());

  BruteForceResult out;
  out.starts = static_cast<int>(starts.size());
  out.best_coeffs.num_sites = L;
  out.best_coeffs.coeffs = complex_best[best_k];
  out.best_coeffs.normalization = Normalization::PerSite;
  out.best_coeffs.identity_offsets = reconstruct_local_operators(out.best_coeffs).offsets;
  out.best = fluctuation_of(state, out.best_coeffs);
  out.hermitian_best = *std::max_element(real_value.begin(), real_value.end());
  out.eigenvector_start_value = eigen_value;
  return out;
}

void write_vcm_csv(std::ostream& os, const Vcm& vcm) {
  const ClassicLocaleGuard classic(os);
  os << "l,alpha,lp,alphap,re,im\n";
  const int L = vcm.num_sites;
  for (int l = 1; l <= L; ++l)
    for (int a = 0; a < 3; ++a)
      for (int lp = 1; lp <= L; ++lp)
        for (int b = 0; b < 3; ++b) {
          const cplx v = vcm.entries(3 * (l - 1) + a, 3 * (lp - 1) + b);
          os << l << ',' << a + 1 << ',' << lp << ',' << b + 1 << ',' << format_number(v.real())
             << ',' << format_number(v.imag()) << '\n';
        }
}

void write_vcm_summary_json(std::ostream& os, const Vcm& vcm) {
  const ClassicLocaleGuard classic(os);
  nlohmann::ordered_json j;
  j["L"] = vcm.num_sites;
  j["e_max"] = round_significant(vcm.e_max);
  j["trace"] = round_significant(vcm.trace());
  j["degenerate"] = vcm.degenerate;
  j["C"] = round_significant(c_factor(max_fluctuating_operator(vcm)));
  os << j.dump(2) << '\n';
}

}  // namespace macroq
