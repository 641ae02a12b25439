// Dense pure-state register over L qubits.
//
// Basis index x encodes site l (1-based) as bit (L - l), so site 1 is the
// most significant bit and |x> prints as the binary string b_1 b_2 ... b_L.

#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace macroq {

using cplx = std::complex<double>;
using BasisIndex = std::uint64_t;

inline constexpr int kMaxQubits = 24;

enum class PauliAxis : int { X = 0, Y = 1, Z = 2 };

inline constexpr PauliAxis kPauliAxes[3] = {PauliAxis::X, PauliAxis::Y, PauliAxis::Z};

char axis_name(PauliAxis axis);
PauliAxis axis_from_index(int index);

class PureState {
 public:
  /// |0...0> on `num_qubits` qubits.
  explicit PureState(int num_qubits);

  /// Takes ownership of `amplitudes`; the length must be exactly 2^num_qubits.
  /// The vector is not renormalized.
  PureState(int num_qubits, std::vector<cplx> amplitudes);

  int num_qubits() const noexcept { return num_qubits_; }
  std::size_t dim() const noexcept { return amps_.size(); }

  std::span<const cplx> amplitudes() const noexcept { return amps_; }
  std::span<cplx> amplitudes() noexcept { return amps_; }

  const cplx& operator[](BasisIndex x) const { return amps_[x]; }
  cplx& operator[](BasisIndex x) { return amps_[x]; }

  double norm_squared() const noexcept;
  void normalize();

  /// Bit position (0 = least significant) holding site l.
  int bit_of_site(int site) const;

 private:
  int num_qubits_;
  std::vector<cplx> amps_;
};

PureState basis_state(int num_qubits, BasisIndex x);

// Gates. All mutate in place and preserve the norm.
void apply_hadamard(PureState& state, int site);
/// Hadamard on sites 1..L in order.
void hadamard_transform(PureState& state);
/// Negates the amplitude at every index in `solutions`.
void apply_oracle(PureState& state, std::span<const BasisIndex> solutions);
/// Leaves x = 0 alone and negates every x > 0.
void apply_phase_shift(PureState& state);
/// Applies an arbitrary 2x2 unitary {{u00, u01}, {u10, u11}} to one site.
void apply_single_qubit(PureState& state, int site, const cplx (&u)[2][2]);

/// <psi|sigma_axis(site)|psi>.
double pauli_expectation(const PureState& state, int site, PauliAxis axis);

/// <psi|sigma_a(site_a) sigma_b(site_b)|psi>. For site_a == site_b the
/// single-site product delta_ab + i eps_abc sigma_c is used.
cplx pauli_pair_expectation(const PureState& state, int site_a, PauliAxis a, int site_b,
                            PauliAxis b);

/// sigma_axis(site)|psi>, written into `out` (resized as needed).
void apply_pauli(const PureState& state, int site, PauliAxis axis, std::vector<cplx>& out);

cplx inner_product(const PureState& bra, const PureState& ket);
/// |<a|b>|^2 for normalized inputs.
double fidelity(const PureState& a, const PureState& b);

// Plain-text amplitude dump: header `L=<n>` then one `index re im` line per
// basis index.
void write_state(std::ostream& os, const PureState& state);
PureState read_state(std::istream& is);
void save_state(const std::string& path, const PureState& state);
PureState load_state(const std::string& path);

}  // namespace macroq
