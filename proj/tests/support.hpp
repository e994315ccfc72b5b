// Copyright 2026 The corrwork Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Shared fixtures and random generators for the test binaries.

#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <span>
#include <vector>

#include "corrwork/qmat.hpp"
#include "corrwork/states.hpp"
#include "corrwork/thermo.hpp"

namespace corrwork::testing {

using qmat::Complex;
using qmat::ComplexMatrix;
using qmat::ComplexVector;

inline constexpr std::uint64_t kSeed = 20260415;

inline constexpr double kLn2 = std::numbers::ln2;

// High-precision reference values (mpmath, 30 digits, truncated).
inline constexpr double kH075 = 0.562335144618808350;
inline constexpr double kH06 = 0.673011667009256436;
inline constexpr double kH09 = 0.325082973391448240;
inline constexpr double kH055 = 0.688138813713588472;

inline double rel_err(double x, double ref) {
  return std::abs(x - ref) / std::abs(ref);
}

inline ComplexVector random_vector(std::mt19937_64& rng, std::size_t dim) {
  std::normal_distribution<double> g;
  ComplexVector v(dim);
  for (auto& z : v) z = Complex(g(rng), g(rng));
  const double n = qmat::norm(v);
  for (auto& z : v) z /= n;
  return v;
}

inline ComplexMatrix random_matrix(std::mt19937_64& rng, std::size_t dim) {
  std::normal_distribution<double> g;
  ComplexMatrix m(dim);
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) m(r, c) = Complex(g(rng), g(rng));
  }
  return m;
}

inline ComplexMatrix random_hermitian(std::mt19937_64& rng, std::size_t dim) {
  const ComplexMatrix a = random_matrix(rng, dim);
  ComplexMatrix h = a + qmat::adjoint(a);
  h *= Complex(0.5, 0.0);
  return h;
}

/// Haar-ish unitary: eigenvectors of a random Hermitian matrix.
inline ComplexMatrix random_unitary(std::mt19937_64& rng, std::size_t dim) {
  return qmat::hermitian_eigensystem(random_hermitian(rng, dim)).vectors;
}

/// A A^dagger / Tr, full rank with probability one.
inline states::TwoQubitState random_state(std::mt19937_64& rng) {
  const ComplexMatrix a = random_matrix(rng, 4);
  ComplexMatrix rho = a * qmat::adjoint(a);
  rho *= Complex(1.0 / rho.trace().real(), 0.0);
  return states::TwoQubitState(rho);
}

/// Gas of the partially correlated setup after the right half was flipped:
/// left holds rho_1 (p) and rho_2 (1 - p), right the reverse.
inline thermo::MembraneNetwork partial_vessel(double p, const thermo::GasSpec& gas) {
  const double half = gas.n_molecules / 2;
  const std::vector<thermo::Population> left{{"left.a", 0, half * p},
                                             {"left.b", 1, half * (1 - p)}};
  const std::vector<thermo::Population> right{{"right.a", 0, half * (1 - p)},
                                              {"right.b", 1, half * p}};
  return thermo::semipermeable_vessel(gas.half_volume, 2, {0}, {1}, left, right);
}

}  // namespace corrwork::testing
