#include <gtest/gtest.h>

#include "macroq/linalg.hpp"
#include "macroq/random.hpp"

using namespace macroq;

namespace {

CMatrix random_hermitian(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  CMatrix a(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    a(r, r) = rng.normal();
    for (std::size_t c = r + 1; c < n; ++c) {
      a(r, c) = {rng.normal(), rng.normal()};
      a(c, r) = std::conj(a(r, c));
    }
  }
  return a;
}

}  // namespace

TEST(CMatrix, BasicAlgebra) {
  CMatrix a(2, 2);
  a(0, 0) = 1.0;
  a(0, 1) = cplx(0.0, 2.0);
  a(1, 0) = 3.0;
  a(1, 1) = 4.0;
  const CMatrix ad = a.adjoint();
  EXPECT_EQ(ad(0, 1), 3.0);
  EXPECT_EQ(ad(1, 0), cplx(0.0, -2.0));
  EXPECT_EQ(a.trace(), cplx(5.0));
  EXPECT_NEAR(a.hermiticity_error(), std::abs(cplx(0.0, 2.0) - 3.0), 1e-15);
  const CMatrix i = CMatrix::identity(2);
  const CMatrix p = a * i;
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 2; ++c) EXPECT_EQ(p(r, c), a(r, c));
  const std::vector<cplx> v{1.0, cplx(0.0, 1.0)};
  const auto av = a * std::span<const cplx>(v);
  EXPECT_EQ(av[0], cplx(-1.0));
  EXPECT_EQ(av[1], cplx(3.0, 4.0));
}

TEST(Jacobi, DiagonalInputIsSorted) {
  CMatrix a(3, 3);
  a(0, 0) = 3.0;
  a(1, 1) = -1.0;
  a(2, 2) = 2.0;
  const auto e = hermitian_eigen(a);
  EXPECT_EQ(e.values, (std::vector<double>{-1.0, 2.0, 3.0}));
}

TEST(Jacobi, PauliYHasEigenvaluesPlusMinusOne) {
  CMatrix a(2, 2);
  a(0, 1) = cplx(0.0, -1.0);
  a(1, 0) = cplx(0.0, 1.0);
  const auto e = hermitian_eigen(a);
  EXPECT_NEAR(e.values[0], -1.0, 1e-15);
  EXPECT_NEAR(e.values[1], 1.0, 1e-15);
}

TEST(Jacobi, ReconstructsRandomHermitianMatrices) {
  for (std::size_t n : {1u, 2u, 5u, 12u, 36u}) {
    const CMatrix a = random_hermitian(n, n);
    const auto e = hermitian_eigen(a);
    double scale = 0.0;
    for (auto z : a.data()) scale = std::max(scale, std::abs(z));
    for (std::size_t j = 0; j < n; ++j) {
      const auto v = e.vectors.column(j);
      const auto av = a * std::span<const cplx>(v);
      for (std::size_t i = 0; i < n; ++i) {
        EXPECT_NEAR(std::abs(av[i] - e.values[j] * v[i]), 0.0, 1e-12 * scale * n);
      }
    }
    const CMatrix g = e.vectors.adjoint() * e.vectors;
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        EXPECT_NEAR(std::abs(g(r, c) - (r == c ? 1.0 : 0.0)), 0.0, 1e-12);
  }
}

TEST(Jacobi, HandlesDegenerateSpectra) {
  // Projector onto a random 3-dim subspace of C^6: eigenvalues 0 x3, 1 x3.
  const CMatrix h = random_hermitian(6, 99);
  const auto basis = hermitian_eigen(h).vectors;
  CMatrix p(6, 6);
  for (std::size_t k = 0; k < 3; ++k)
    for (std::size_t r = 0; r < 6; ++r)
      for (std::size_t c = 0; c < 6; ++c) p(r, c) += basis(r, k) * std::conj(basis(c, k));
  const auto e = hermitian_eigen(p);
  for (int i = 0; i < 3; ++i) EXPECT_NEAR(e.values[i], 0.0, 1e-13);
  for (int i = 3; i < 6; ++i) EXPECT_NEAR(e.values[i], 1.0, 1e-13);
}

TEST(QuadraticForm, IsRealForHermitianMatrices) {
  const CMatrix a = random_hermitian(7, 5);
  Rng rng(1);
  std::vector<cplx> v(7);
  for (auto& z : v) z = {rng.normal(), rng.normal()};
  EXPECT_NEAR(quadratic_form(a, v).imag(), 0.0, 1e-12);
}
