// Reference states with a known index p.

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "macroq/statevector.hpp"
#include "macroq/vcm.hpp"

namespace macroq {

inline constexpr int kCatalogMinSites = 3;

/// (|0..0> + |1..1>)/sqrt(2).
PureState ghz(int num_sites);

/// (1/sqrt(L-1)) sum_{j=1}^{L-1} |1^j 0^(L-j)>.
PureState domain_wall(int num_sites);

/// Uniform superposition of the L single-excitation kets.
PureState w_state(int num_sites);

/// (|1010..10> + |0101..01>)/sqrt(2); L even.
PureState staggered_pair_beta(int num_sites);

/// |+>^L, the sigma_x = +1 product state.
PureState plus_product(int num_sites);

/// Tensor product of independent uniformly random single-qubit states.
PureState random_product_state(int num_sites, std::uint64_t seed);

/// Haar-random state: normalized vector of complex Gaussian amplitudes.
PureState haar_random_state(int num_sites, std::uint64_t seed);

struct CatalogEntry {
  std::string name;
  std::function<PureState(int)> constructor;
  int expected_p = 1;
  std::optional<std::function<double(int)>> expected_emax;
  /// Human-readable closed form of expected_emax, e.g. "L".
  std::string expected_emax_text;
  /// Operator whose fluctuation witnesses the expected scaling.
  std::optional<std::function<AdditiveOperatorCoeffs(int)>> witness;
  std::string witness_text;
  bool even_sites_only = false;
};

const std::vector<CatalogEntry>& catalog();

/// Throws std::invalid_argument for an unknown name.
const CatalogEntry& catalog_entry(const std::string& name);

}  // namespace macroq
