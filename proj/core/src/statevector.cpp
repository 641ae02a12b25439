#include "macroq/statevector.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string_view>
#include <unordered_set>

#include "macroq/format.hpp"

namespace macroq {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;
constexpr cplx kI{0.0, 1.0};

void check_qubits(int num_qubits) {
  if (num_qubits < 1 || num_qubits > kMaxQubits) {
    throw std::domain_error("qubit count " + std::to_string(num_qubits) + " outside [1, " +
                            std::to_string(kMaxQubits) + "]");
  }
}

void check_site(const PureState& state, int site) {
  if (site < 1 || site > state.num_qubits()) {
    throw std::out_of_range("site " + std::to_string(site) + " outside [1, " +
                            std::to_string(state.num_qubits()) + "]");
  }
}

// sigma_axis acting on the bit at `mask`: |x> -> phase |x'>.
inline BasisIndex pauli_target(BasisIndex x, BasisIndex mask, PauliAxis axis) {
  return axis == PauliAxis::Z ? x : (x ^ mask);
}

inline cplx pauli_phase(BasisIndex x, BasisIndex mask, PauliAxis axis) {
  const bool one = (x & mask) != 0;
  switch (axis) {
    case PauliAxis::X:
      return 1.0;
    case PauliAxis::Y:
      return one ? -kI : kI;
    case PauliAxis::Z:
      return one ? -1.0 : 1.0;
  }
  return 0.0;
}

// Levi-Civita eps_{abc} for the unique c != a, b (a != b).
inline std::pair<int, double> levi_civita(int a, int b) {
  const int c = 3 - a - b;
  const bool cyclic = (b == (a + 1) % 3);
  return {c, cyclic ? 1.0 : -1.0};
}

}  // namespace

char axis_name(PauliAxis axis) {
  switch (axis) {
    case PauliAxis::X:
      return 'x';
    case PauliAxis::Y:
      return 'y';
    case PauliAxis::Z:
      return 'z';
  }
  return '?';
}

PauliAxis axis_from_index(int index) {
  if (index < 0 || index > 2) throw std::out_of_range("Pauli axis index must be 0, 1 or 2");
  return static_cast<PauliAxis>(index);
}

PureState::PureState(int num_qubits) : num_qubits_(num_qubits) {
  check_qubits(num_qubits);
  amps_.assign(std::size_t{1} << num_qubits, cplx{});
  amps_[0] = 1.0;
}

PureState::PureState(int num_qubits, std::vector<cplx> amplitudes)
    : num_qubits_(num_qubits), amps_(std::move(amplitudes)) {
  check_qubits(num_qubits);
  if (amps_.size() != (std::size_t{1} << num_qubits)) {
    throw std::invalid_argument("amplitude vector length " + std::to_string(amps_.size()) +
                                " is not 2^" + std::to_string(num_qubits));
  }
}

double PureState::norm_squared() const noexcept {
  double s = 0.0;
  for (const auto& a : amps_) s += std::norm(a);
  return s;
}

void PureState::normalize() {
  const double n = std::sqrt(norm_squared());
  if (n == 0.0) throw std::domain_error("cannot normalize the zero vector");
  for (auto& a : amps_) a /= n;
}

int PureState::bit_of_site(int site) const {
  check_site(*this, site);
  return num_qubits_ - site;
}

PureState basis_state(int num_qubits, BasisIndex x) {
  PureState s(num_qubits);
  if (x >= s.dim()) {
    throw std::domain_error("basis index " + std::to_string(x) + " outside [0, 2^" +
                            std::to_string(num_qubits) + ")");
  }
  s[0] = 0.0;
  s[x] = 1.0;
  return s;
}

void apply_hadamard(PureState& state, int site) {
  const BasisIndex mask = BasisIndex{1} << state.bit_of_site(site);
  auto amps = state.amplitudes();
  const BasisIndex dim = amps.size();
  for (BasisIndex base = 0; base < dim; base += 2 * mask) {
    for (BasisIndex x = base; x < base + mask; ++x) {
      const cplx a = amps[x];
      const cplx b = amps[x | mask];
      amps[x] = (a + b) * kInvSqrt2;
      amps[x | mask] = (a - b) * kInvSqrt2;
    }
  }
}

void hadamard_transform(PureState& state) {
  for (int site = 1; site <= state.num_qubits(); ++site) apply_hadamard(state, site);
}

void apply_oracle(PureState& state, std::span<const BasisIndex> solutions) {
  if (solutions.empty()) throw std::invalid_argument("oracle needs at least one solution");
  for (BasisIndex x : solutions) {
    if (x >= state.dim()) throw std::out_of_range("oracle solution " + std::to_string(x));
  }
  for (BasisIndex x : solutions) state[x] = -state[x];
}

void apply_phase_shift(PureState& state) {
  auto amps = state.amplitudes();
  for (std::size_t x = 1; x < amps.size(); ++x) amps[x] = -amps[x];
}

void apply_single_qubit(PureState& state, int site, const cplx (&u)[2][2]) {
  const BasisIndex mask = BasisIndex{1} << state.bit_of_site(site);
  auto amps = state.amplitudes();
  const BasisIndex dim = amps.size();
  for (BasisIndex base = 0; base < dim; base += 2 * mask) {
    for (BasisIndex x = base; x < base + mask; ++x) {
      const cplx a = amps[x];
      const cplx b = amps[x | mask];
      amps[x] = u[0][0] * a + u[0][1] * b;
      amps[x | mask] = u[1][0] * a + u[1][1] * b;
    }
  }
}

double pauli_expectation(const PureState& state, int site, PauliAxis axis) {
  const BasisIndex mask = BasisIndex{1} << state.bit_of_site(site);
  const auto amps = state.amplitudes();
  cplx acc = 0.0;
  for (BasisIndex x = 0; x < amps.size(); ++x) {
    acc += std::conj(amps[pauli_target(x, mask, axis)]) * pauli_phase(x, mask, axis) * amps[x];
  }
  return acc.real();
}

cplx pauli_pair_expectation(const PureState& state, int site_a, PauliAxis a, int site_b,
                            PauliAxis b) {
  if (site_a == site_b) {
    check_site(state, site_a);
    const int ia = static_cast<int>(a);
    const int ib = static_cast<int>(b);
    if (ia == ib) return 1.0;
    const auto [c, eps] = levi_civita(ia, ib);
    return kI * eps * pauli_expectation(state, site_a, axis_from_index(c));
  }
  const BasisIndex mask_a = BasisIndex{1} << state.bit_of_site(site_a);
  const BasisIndex mask_b = BasisIndex{1} << state.bit_of_site(site_b);
  const auto amps = state.amplitudes();
  cplx acc = 0.0;
  for (BasisIndex x = 0; x < amps.size(); ++x) {
    const BasisIndex xb = pauli_target(x, mask_b, b);
    const cplx phase = pauli_phase(x, mask_b, b) * pauli_phase(xb, mask_a, a);
    acc += std::conj(amps[pauli_target(xb, mask_a, a)]) * phase * amps[x];
  }
  return acc;
}

void apply_pauli(const PureState& state, int site, PauliAxis axis, std::vector<cplx>& out) {
  const BasisIndex mask = BasisIndex{1} << state.bit_of_site(site);
  const auto amps = state.amplitudes();
  out.assign(amps.size(), cplx{});
  for (BasisIndex x = 0; x < amps.size(); ++x) {
    out[pauli_target(x, mask, axis)] = pauli_phase(x, mask, axis) * amps[x];
  }
}

cplx inner_product(const PureState& bra, const PureState& ket) {
  if (bra.num_qubits() != ket.num_qubits()) {
    throw std::invalid_argument("inner_product: qubit counts differ");
  }
  cplx acc = 0.0;
  const auto a = bra.amplitudes();
  const auto b = ket.amplitudes();
  for (std::size_t x = 0; x < a.size(); ++x) acc += std::conj(a[x]) * b[x];
  return acc;
}

double fidelity(const PureState& a, const PureState& b) { return std::norm(inner_product(a, b)); }

void write_state(std::ostream& os, const PureState& state) {
  const ClassicLocaleGuard classic(os);
  os << "L=" << state.num_qubits() << '\n';
  const auto amps = state.amplitudes();
  for (std::size_t x = 0; x < amps.size(); ++x) {
    os << x << ' ' << format_number(amps[x].real(), 17) << ' '
       << format_number(amps[x].imag(), 17) << '\n';
  }
}

namespace {

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

template <class T>
T parse_field(std::string_view& rest, std::size_t line, const char* what) {
  rest = trim(rest);
  const auto end = rest.find_first_of(" \t");
  const std::string_view tok = rest.substr(0, end);
  T value{};
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw ParseError(line, std::string("expected ") + what + ", got '" + std::string(tok) + "'");
  }
  rest = end == std::string_view::npos ? std::string_view{} : rest.substr(end);
  return value;
}

}  // namespace

PureState read_state(std::istream& is) {
  std::string text;
  std::size_t line_no = 0;
  int num_qubits = 0;
  while (std::getline(is, text)) {
    ++line_no;
    const auto t = trim(text);
    if (t.empty() || t.front() == '#') continue;
    if (t.substr(0, 2) != "L=") throw ParseError(line_no, "expected header 'L=<n>'");
    std::string_view rest = t.substr(2);
    num_qubits = parse_field<int>(rest, line_no, "qubit count");
    if (num_qubits < 1 || num_qubits > kMaxQubits) {
      throw ParseError(line_no, "qubit count out of range");
    }
    break;
  }
  if (num_qubits == 0) throw ParseError(line_no + 1, "missing header 'L=<n>'");

  const std::size_t dim = std::size_t{1} << num_qubits;
  std::vector<cplx> amps(dim);
  std::vector<bool> seen(dim, false);
  std::size_t count = 0;
  while (std::getline(is, text)) {
    ++line_no;
    const auto t = trim(text);
    if (t.empty() || t.front() == '#') continue;
    std::string_view rest = t;
    const auto index = parse_field<std::uint64_t>(rest, line_no, "basis index");
    const double re = parse_field<double>(rest, line_no, "real part");
    const double im = parse_field<double>(rest, line_no, "imaginary part");
    if (!trim(rest).empty()) throw ParseError(line_no, "trailing characters");
    if (index >= dim) throw ParseError(line_no, "basis index out of range");
    if (seen[index]) throw ParseError(line_no, "duplicate basis index " + std::to_string(index));
    seen[index] = true;
    amps[index] = {re, im};
    ++count;
  }
  if (count != dim) {
    throw ParseError(line_no, "expected " + std::to_string(dim) + " amplitudes, found " +
                                  std::to_string(count));
  }
  return PureState(num_qubits, std::move(amps));
}

void save_state(const std::string& path, const PureState& state) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open '" + path + "' for writing");
  write_state(os, state);
  if (!os) throw std::runtime_error("write to '" + path + "' failed");
}

PureState load_state(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open '" + path + "'");
  return read_state(is);
}

}  // namespace macroq
