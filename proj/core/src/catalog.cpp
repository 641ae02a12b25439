#include "macroq/catalog.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "macroq/random.hpp"

namespace macroq {

namespace {

void check_sites(int num_sites) {
  if (num_sites < kCatalogMinSites || num_sites > kMaxQubits) {
    throw std::domain_error("catalog states need " + std::to_string(kCatalogMinSites) +
                            " <= L <= " + std::to_string(kMaxQubits) + ", got " +
                            std::to_string(num_sites));
  }
}

// |1^j 0^(L-j)> with site 1 as the most significant bit.
BasisIndex left_filled(int num_sites, int j) {
  const BasisIndex all = (BasisIndex{1} << num_sites) - 1;
  return all ^ ((BasisIndex{1} << (num_sites - j)) - 1);
}

}  // namespace

PureState ghz(int num_sites) {
  check_sites(num_sites);
  PureState s(num_sites);
  const double r = 1.0 / std::sqrt(2.0);
  s[0] = r;
  s[s.dim() - 1] = r;
  return s;
}

PureState domain_wall(int num_sites) {
  check_sites(num_sites);
  PureState s(num_sites);
  s[0] = 0.0;
  const double a = 1.0 / std::sqrt(static_cast<double>(num_sites - 1));
  for (int j = 1; j < num_sites; ++j) s[left_filled(num_sites, j)] = a;
  return s;
}

PureState w_state(int num_sites) {
  check_sites(num_sites);
  PureState s(num_sites);
  s[0] = 0.0;
  const double a = 1.0 / std::sqrt(static_cast<double>(num_sites));
  for (int l = 0; l < num_sites; ++l) s[BasisIndex{1} << l] = a;
  return s;
}

PureState staggered_pair_beta(int num_sites) {
  check_sites(num_sites);
  if (num_sites % 2 != 0) throw std::domain_error("staggered pair needs even L");
  BasisIndex x0 = 0;
  for (int l = 1; l <= num_sites; l += 2) x0 |= BasisIndex{1} << (num_sites - l);
  const BasisIndex x1 = x0 ^ ((BasisIndex{1} << num_sites) - 1);
  PureState s(num_sites);
  s[0] = 0.0;
  const double r = 1.0 / std::sqrt(2.0);
  s[x0] = r;
  s[x1] = r;
  return s;
}

PureState plus_product(int num_sites) {
  check_sites(num_sites);
  PureState s(num_sites);
  hadamard_transform(s);
  return s;
}

PureState random_product_state(int num_sites, std::uint64_t seed) {
  if (num_sites < 1 || num_sites > kMaxQubits) throw std::domain_error("qubit count out of range");
  Rng rng(seed);
  std::vector<cplx> amps{1.0};
  for (int l = 0; l < num_sites; ++l) {
    // Uniform on the Bloch sphere.
    const double cos_t = 2.0 * rng.uniform() - 1.0;
    const double phi = 2.0 * std::numbers::pi * rng.uniform();
    const double a = std::sqrt(0.5 * (1.0 + cos_t));
    const cplx b = std::polar(std::sqrt(0.5 * (1.0 - cos_t)), phi);
    std::vector<cplx> next(amps.size() * 2);
    for (std::size_t i = 0; i < amps.size(); ++i) {
      next[2 * i] = amps[i] * a;
      next[2 * i + 1] = amps[i] * b;
    }
    amps = std::move(next);
  }
  PureState s(num_sites, std::move(amps));
  s.normalize();
  return s;
}

PureState haar_random_state(int num_sites, std::uint64_t seed) {
  if (num_sites < 1 || num_sites > kMaxQubits) throw std::domain_error("qubit count out of range");
  Rng rng(seed);
  std::vector<cplx> amps(std::size_t{1} << num_sites);
  for (auto& a : amps) {
    const double re = rng.normal();
    a = {re, rng.normal()};
  }
  PureState s(num_sites, std::move(amps));
  s.normalize();
  return s;
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = [] {
    auto z_uniform = [](int L) { return uniform_axis_operator(L, PauliAxis::Z); };
    auto z_staggered = [](int L) { return uniform_axis_operator(L, PauliAxis::Z, true); };
    auto linear = [](int L) { return static_cast<double>(L); };
    std::vector<CatalogEntry> v;
    v.push_back({"ghz", ghz, 2, linear, "L", z_uniform, "uniform z", false});
    v.push_back({"domain_wall", domain_wall, 2, std::nullopt, "", z_uniform, "uniform z", false});
    v.push_back({"w", w_state, 1, [](int L) { return 4.0 - 4.0 / L; }, "4 - 4/L", std::nullopt, "",
                 false});
    v.push_back({"staggered_pair", staggered_pair_beta, 2, linear, "L", z_staggered,
                 "staggered z", true});
    v.push_back({"product", plus_product, 1, [](int) { return 2.0; }, "2", std::nullopt, "", false});
    return v;
  }();
  return entries;
}

const CatalogEntry& catalog_entry(const std::string& name) {
  for (const auto& e : catalog()) {
    if (e.name == name) return e;
  }
  throw std::invalid_argument("unknown catalog state '" + name + "'");
}

}  // namespace macroq
