#include "eomq/special_functions.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace eomq;

namespace {

CMatrix random_hermitian(std::size_t n, double scale, std::mt19937_64& rng) {
  std::normal_distribution<double> d(0.0, scale);
  CMatrix g(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    g(i, i) = d(rng);
    for (std::size_t j = i + 1; j < n; ++j) {
      g(i, j) = {d(rng), d(rng)};
      g(j, i) = std::conj(g(i, j));
    }
  }
  return g;
}

}  // namespace

TEST(bessel, trivial_values) {
  EXPECT_EQ(bessel_j(0, 0.0), 1.0);
  EXPECT_EQ(bessel_j(1, 0.0), 0.0);
  EXPECT_EQ(bessel_j(-3, 0.0), 0.0);
}

TEST(bessel, against_series_oracle) {
  EXPECT_NEAR(bessel_j(2, 1.5), bessel_j_series(2, 1.5, 30), 1e-12);
  EXPECT_NEAR(bessel_j(3, 0.1), bessel_j_series(3, 0.1, 20), 1e-14);
  EXPECT_NEAR(bessel_j(1, 2.0), bessel_j_series(1, 2.0, 40), 1e-12);
  EXPECT_EQ(bessel_j_series(0, 0.0, 20), 1.0);
  // Values from a 40-digit reference.
  EXPECT_NEAR(bessel_j(2, 1.5), 0.23208767214421472724, 1e-15);
  EXPECT_NEAR(bessel_j(5, 37.5), -0.079633594787026318429, 1e-13);
  EXPECT_NEAR(bessel_j(0, 50.0), 0.055812327669251815005, 1e-13);
  EXPECT_NEAR(bessel_j(40, 10.0) / 6.0308953123469066317e-21, 1.0, 1e-12);
}

TEST(bessel, series_oracle_preconditions) {
  EXPECT_THROW(bessel_j_series(-1, 1.0, 30), std::invalid_argument);
  EXPECT_THROW(bessel_j_series(1, 1.0, 19), std::invalid_argument);
}

TEST(bessel, symmetry_and_domain) {
  for (int s = -9; s <= 9; ++s) {
    const double sign = (s % 2 == 0) ? 1.0 : -1.0;
    EXPECT_DOUBLE_EQ(bessel_j(-s, 1.7), sign * bessel_j(s, 1.7));
    EXPECT_DOUBLE_EQ(bessel_j(s, -1.7), sign * bessel_j(s, 1.7));
  }
  EXPECT_THROW(bessel_j(0, 50.5), std::out_of_range);
  EXPECT_THROW(bessel_j(0, -51.0), std::out_of_range);
  EXPECT_THROW(bessel_j(0, std::nan("")), std::out_of_range);
  EXPECT_NEAR(bessel_j(1, 1e-120), 0.5e-120, 1e-135);
}

TEST(bessel, matches_libstdcxx_over_domain) {
  for (double x = 0.05; x <= 50.0; x += 0.37) {
    for (int s = 0; s <= 80; s += 3) {
      ASSERT_NEAR(bessel_j(s, x), std::cyl_bessel_j(static_cast<double>(s), x), 1e-12) << "s=" << s << " x=" << x;
    }
  }
}

TEST(bessel, recurrence_property) {
  for (double x : {0.3, 1.0, 2.5, 7.0, 19.0, 44.0}) {
    for (int s = -20; s <= 60; ++s) {
      const double lhs = bessel_j(s - 1, x) + bessel_j(s + 1, x);
      ASSERT_NEAR(lhs, 2.0 * s / x * bessel_j(s, x), 1e-10) << s << " " << x;
    }
  }
}

TEST(bessel, normalization_tail) {
  for (double x = 0.1; x <= 3.0; x += 0.1) {
    double sum = bessel_j(0, x) * bessel_j(0, x);
    for (int s = 1; s <= 25; ++s) sum += 2.0 * bessel_j(s, x) * bessel_j(s, x);
    ASSERT_NEAR(sum, 1.0, 1e-12) << x;
  }
}

TEST(unitary_exp, zero_and_diagonal) {
  EXPECT_EQ(max_abs_diff(unitary_exp(HermitianGenerator(CMatrix(5, 5))), CMatrix::identity(5)), 0.0);
  CMatrix g(4, 4);
  const double phis[] = {0.3, -1.2, 2.9, 7.0};
  for (std::size_t i = 0; i < 4; ++i) g(i, i) = phis[i];
  const CMatrix u = unitary_exp(HermitianGenerator(g));
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_NEAR(std::abs(u(i, i) - std::polar(1.0, phis[i])), 0.0, 1e-13);
    for (std::size_t j = 0; j < 4; ++j)
      if (i != j) EXPECT_EQ(u(i, j), cplx{});
  }
}

TEST(unitary_exp, splitter_rotation) {
  for (double theta : {0.1, std::numbers::pi / 2, 2.0, 5.5}) {
    CMatrix g(2, 2);
    g(0, 1) = g(1, 0) = theta / 2;
    const CMatrix u = unitary_exp(HermitianGenerator(g));
    EXPECT_NEAR(std::abs(u(0, 0) - std::cos(theta / 2)), 0.0, 1e-14);
    EXPECT_NEAR(std::abs(u(1, 1) - std::cos(theta / 2)), 0.0, 1e-14);
    EXPECT_NEAR(std::abs(u(0, 1) - kJ * std::sin(theta / 2)), 0.0, 1e-14);
    EXPECT_NEAR(std::abs(u(1, 0) - kJ * std::sin(theta / 2)), 0.0, 1e-14);
  }
}

TEST(unitary_exp, rejects_bad_generators) {
  EXPECT_THROW(HermitianGenerator{CMatrix()}, std::invalid_argument);
  EXPECT_THROW(HermitianGenerator(CMatrix(2, 3)), std::invalid_argument);
  CMatrix g(2, 2);
  g(0, 1) = {0.0, 1.0};
  g(1, 0) = {0.0, 1.0};
  EXPECT_THROW(HermitianGenerator{g}, std::invalid_argument);
}

TEST(unitary_exp, unitarity_and_inverse_random) {
  std::mt19937_64 rng(42);
  for (std::size_t n : {3u, 17u, 64u, 150u}) {
    const CMatrix g = random_hermitian(n, 1.0, rng);
    const CMatrix u = unitary_exp(HermitianGenerator(g));
    EXPECT_LT(unitarity_defect(u), 1e-11) << n;
    const CMatrix u_inv = unitary_exp(HermitianGenerator(-1.0 * g));
    EXPECT_LT(max_abs_diff(kernels::matmul(u, u_inv), CMatrix::identity(n)), 1e-11) << n;
  }
}

TEST(unitary_exp, serial_and_parallel_agree_bitwise) {
  std::mt19937_64 rng(7);
  const HermitianGenerator g(random_hermitian(40, 0.8, rng));
  EXPECT_EQ(max_abs_diff(unitary_exp(g, Exec::serial), unitary_exp(g, Exec::parallel)), 0.0);
}

TEST(unitary_exp, largest_supported_dimension) {
  std::mt19937_64 rng(512);
  const CMatrix u = unitary_exp(HermitianGenerator(random_hermitian(512, 0.2, rng)));
  EXPECT_LT(unitarity_defect(u), 1e-11);
}
