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

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "corrwork/error.hpp"
#include "corrwork/qmat.hpp"
#include "doctest.h"
#include "support.hpp"

namespace {

using namespace corrwork::qmat;
using corrwork::Error;
using corrwork::ErrorCode;
using corrwork::testing::random_hermitian;
using corrwork::testing::random_matrix;
using corrwork::testing::random_unitary;
using corrwork::testing::random_vector;

ComplexMatrix sigma_x() { return ComplexMatrix(2, {0.0, 1.0, 1.0, 0.0}); }

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected corrwork::Error");
  return ErrorCode::invalid_argument;
}

ComplexVector ket(std::size_t i) {
  ComplexVector v(4);
  v[i] = 1.0;
  return v;
}

}  // namespace

TEST_CASE("matrix construction rejects bad input") {
  CHECK(code_of([] { ComplexMatrix(2, {1.0, 2.0, 3.0}); }) == ErrorCode::domain);
  CHECK(code_of([] { ComplexMatrix(2, {1.0, NAN, 0.0, 1.0}); }) == ErrorCode::domain);
  CHECK(code_of([] {
          ComplexMatrix(2, {1.0, Complex(0.0, INFINITY), 0.0, 1.0});
        }) == ErrorCode::domain);
}

TEST_CASE("tensor follows the |row_a, row_b> ordering") {
  CHECK(tensor(ComplexMatrix::identity(2), ComplexMatrix::identity(2)) ==
        ComplexMatrix::identity(4));

  const ComplexMatrix flip = tensor(ComplexMatrix::identity(2), sigma_x());
  const ComplexVector out = flip * ket(0);
  CHECK(out == ket(1));

  const double s = 1.0 / std::sqrt(2.0);
  const ComplexVector phi_plus{s, 0.0, 0.0, s};
  const ComplexVector psi_plus{0.0, s, s, 0.0};
  const ComplexVector mapped = flip * phi_plus;
  for (std::size_t i = 0; i < 4; ++i) CHECK(std::abs(mapped[i] - psi_plus[i]) < 1e-15);

  const ComplexMatrix a(2, {1.0, 2.0, 3.0, 4.0});
  const ComplexMatrix b(2, {0.0, Complex(0, 1), 5.0, 6.0});
  const ComplexMatrix k = tensor(a, b);
  CHECK(k(1, 3) == a(0, 1) * b(1, 1));
  CHECK(k(2, 1) == a(1, 0) * b(0, 1));
}

TEST_CASE("tensor is associative and bilinear on random inputs") {
  std::mt19937_64 rng(corrwork::testing::kSeed);
  for (int trial = 0; trial < 10; ++trial) {
    const auto a = random_matrix(rng, 2);
    const auto b = random_matrix(rng, 2);
    const auto c = random_matrix(rng, 2);
    CHECK(max_abs_diff(tensor(tensor(a, b), c), tensor(a, tensor(b, c))) < 1e-12);
    const Complex z(0.3, -1.7);
    CHECK(max_abs_diff(tensor(z * a + c, b), z * tensor(a, b) + tensor(c, b)) < 1e-12);
  }
}

TEST_CASE("adjoint") {
  CHECK(adjoint(ComplexMatrix::identity(4)) == ComplexMatrix::identity(4));
  CHECK(adjoint(sigma_x()) == sigma_x());
  std::mt19937_64 rng(corrwork::testing::kSeed + 1);
  const auto m = random_matrix(rng, 4);
  CHECK(adjoint(adjoint(m)) == m);
  CHECK(adjoint(m)(2, 1) == std::conj(m(1, 2)));
}

TEST_CASE("is_unitary") {
  CHECK(is_unitary(ComplexMatrix::identity(4), 1e-12));
  CHECK_FALSE(is_unitary(2.0 * ComplexMatrix::identity(4), 1e-12));
  CHECK_FALSE(is_unitary(ComplexMatrix::identity(4), -1.0));
}

TEST_CASE("hermitian eigenvalues of reference matrices") {
  const double p = 0.75;
  const auto vals =
      hermitian_eigenvalues(ComplexMatrix::diagonal({p / 2, (1 - p) / 2, (1 - p) / 2, p / 2}));
  REQUIRE(vals.size() == 4);
  CHECK(vals[0] == doctest::Approx(0.125).epsilon(1e-14));
  CHECK(vals[1] == doctest::Approx(0.125).epsilon(1e-14));
  CHECK(vals[2] == doctest::Approx(0.375).epsilon(1e-14));
  CHECK(vals[3] == doctest::Approx(0.375).epsilon(1e-14));

  const double s = 1.0 / std::sqrt(2.0);
  const ComplexVector phi_plus{s, 0.0, 0.0, s};
  const auto bell = hermitian_eigenvalues(ComplexMatrix::projector(phi_plus));
  CHECK(std::abs(bell[0]) < 1e-14);
  CHECK(std::abs(bell[1]) < 1e-14);
  CHECK(std::abs(bell[2]) < 1e-14);
  CHECK(std::abs(bell[3] - 1.0) < 1e-14);

  ComplexMatrix mixed = ComplexMatrix::identity(4);
  mixed *= 0.25;
  for (double v : hermitian_eigenvalues(mixed)) CHECK(std::abs(v - 0.25) < 1e-15);
}

TEST_CASE("hermitian eigensystem residuals on random inputs") {
  std::mt19937_64 rng(corrwork::testing::kSeed + 2);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t dim = trial % 2 == 0 ? 4 : 2;
    const auto h = random_hermitian(rng, dim);
    const auto es = hermitian_eigensystem(h);
    for (std::size_t j = 0; j < dim; ++j) {
      if (j > 0) CHECK(es.values[j - 1] <= es.values[j]);
      const auto v = es.vectors.column(j);
      auto hv = h * v;
      for (std::size_t i = 0; i < dim; ++i) hv[i] -= es.values[j] * v[i];
      CHECK(norm(hv) <= 1e-10);
    }
    CHECK(is_unitary(es.vectors, 1e-12));
    const auto closed = hermitian_eigenvalues(h);
    for (std::size_t j = 0; j < dim; ++j) CHECK(std::abs(closed[j] - es.values[j]) < 1e-10);
  }
}

TEST_CASE("non-Hermitian input is rejected") {
  const ComplexMatrix m(2, {1.0, 1.0, 0.0, 1.0});
  CHECK(code_of([&] { hermitian_eigenvalues(m); }) == ErrorCode::not_hermitian);
  ComplexMatrix near = ComplexMatrix::identity(4);
  near(0, 1) = 1e-12;
  CHECK_NOTHROW(hermitian_eigenvalues(near));
}

TEST_CASE("partial trace") {
  const double s = 1.0 / std::sqrt(2.0);
  const ComplexVector phi_plus{s, 0.0, 0.0, s};
  ComplexMatrix half = ComplexMatrix::identity(2);
  half *= 0.5;
  CHECK(max_abs_diff(partial_trace(ComplexMatrix::projector(phi_plus), Subsystem::a), half) <
        1e-15);

  const double p = 0.75;
  const auto rho = ComplexMatrix::diagonal({p / 2, (1 - p) / 2, (1 - p) / 2, p / 2});
  CHECK(max_abs_diff(partial_trace(rho, Subsystem::b), half) < 1e-15);

  const auto zero = ComplexMatrix::projector(ket(0));
  CHECK(partial_trace(zero, Subsystem::a) == ComplexMatrix::diagonal({1.0, 0.0}));
}

TEST_CASE("partial trace of a product and trace preservation") {
  std::mt19937_64 rng(corrwork::testing::kSeed + 3);
  for (int trial = 0; trial < 20; ++trial) {
    const auto sigma = random_matrix(rng, 2);
    const auto tau = random_matrix(rng, 2);
    const auto prod = tensor(sigma, tau);
    CHECK(max_abs_diff(partial_trace(prod, Subsystem::a), tau.trace() * sigma) < 1e-12);
    CHECK(max_abs_diff(partial_trace(prod, Subsystem::b), sigma.trace() * tau) < 1e-12);
    const auto rho = random_matrix(rng, 4);
    CHECK(std::abs(partial_trace(rho, Subsystem::a).trace() - rho.trace()) < 1e-12);
    CHECK(std::abs(partial_trace(rho, Subsystem::b).trace() - rho.trace()) < 1e-12);
  }
}

TEST_CASE("complete_to_unitary") {
  const std::vector<ComplexVector> e0{ket(0)};
  CHECK(complete_to_unitary(e0) == ComplexMatrix::identity(4));

  const double s = 1.0 / std::sqrt(2.0);
  const std::vector<ComplexVector> phi{{s, 0.0, 0.0, s}};
  const auto u = complete_to_unitary(phi);
  CHECK(is_unitary(u, 1e-12));
  for (std::size_t i = 0; i < 4; ++i) CHECK(std::abs(u(i, 0) - phi[0][i]) < 1e-15);

  const double p = 0.8;
  const std::vector<ComplexVector> psi{
      {std::sqrt(p / 2), std::sqrt((1 - p) / 2), std::sqrt((1 - p) / 2), -std::sqrt(p / 2)}};
  const auto w = complete_to_unitary(psi);
  CHECK(is_unitary(w, 1e-12));
  const auto image = w * ket(0);
  for (std::size_t i = 0; i < 4; ++i) CHECK(std::abs(image[i] - psi[0][i]) < 1e-12);

  std::mt19937_64 rng(corrwork::testing::kSeed + 4);
  for (int trial = 0; trial < 20; ++trial) {
    const auto q = random_unitary(rng, 4);
    const std::vector<ComplexVector> cols{q.column(0), q.column(1)};
    const auto full = complete_to_unitary(cols);
    CHECK(is_unitary(full, 1e-10));
    for (std::size_t i = 0; i < 4; ++i) CHECK(std::abs(full(i, 1) - cols[1][i]) < 1e-14);
  }
}

TEST_CASE("complete_to_unitary preconditions") {
  const std::vector<ComplexVector> none;
  CHECK(code_of([&] { complete_to_unitary(none); }) == ErrorCode::invalid_argument);
  const std::vector<ComplexVector> long_vec{{2.0, 0.0, 0.0, 0.0}};
  CHECK(code_of([&] { complete_to_unitary(long_vec); }) == ErrorCode::not_orthonormal);
  const std::vector<ComplexVector> skew{ket(0), {std::sqrt(0.5), std::sqrt(0.5), 0.0, 0.0}};
  CHECK(code_of([&] { complete_to_unitary(skew); }) == ErrorCode::not_orthonormal);
}

TEST_CASE("random vectors are unit norm") {
  std::mt19937_64 rng(corrwork::testing::kSeed + 5);
  for (int i = 0; i < 5; ++i) CHECK(std::abs(norm(random_vector(rng, 4)) - 1.0) < 1e-14);
}
