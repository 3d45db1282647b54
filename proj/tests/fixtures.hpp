// Copyright 2026 The cqed-gate Authors
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

#ifndef CQED_TESTS_FIXTURES_HPP_
#define CQED_TESTS_FIXTURES_HPP_

#include <numbers>
#include <random>

#include "cqed/hamiltonian.hpp"

namespace cqed::testing {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
inline double ghz(double f) { return kTwoPi * f * 1e9; }
inline double mhz(double f) { return kTwoPi * f * 1e6; }

// The three-cavity parameter set written out by hand, independent of the
// design solver.
inline SystemParams flagship_params() {
  SystemParams p;
  p.n = 3;
  p.omega_eg = ghz(5.0);
  p.omega_fe = ghz(7.5);
  p.omega_fg = ghz(12.5);
  p.omega_c = {ghz(11.0), ghz(5.99), ghz(5.97)};
  p.g = {mhz(150.0), mhz(86.89), mhz(151.49)};
  p.g_tilde = p.g;
  p.g_cross = Eigen::MatrixXd::Constant(3, 3, 0.01 * mhz(151.49));
  p.g_cross.diagonal().setZero();
  p.m = 2;
  return p;
}

// Random Hermitian, positive, unit-trace matrix.
inline Matrix random_density(int dim, unsigned seed) {
  std::mt19937 rng(seed);
  std::normal_distribution<double> normal;
  Matrix a(dim, dim);
  for (int c = 0; c < dim; ++c) {
    for (int r = 0; r < dim; ++r) a(r, c) = Complex(normal(rng), normal(rng));
  }
  Matrix rho = a * a.adjoint();
  return rho / rho.trace();
}

}  // namespace cqed::testing

#endif  // CQED_TESTS_FIXTURES_HPP_
