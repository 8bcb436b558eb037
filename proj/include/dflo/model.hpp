// Copyright 2026 The dflo Authors
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

#pragma once

#include <vector>

#include "dflo/types.hpp"

namespace dflo {

// The canonical internal basis is Majorana: mode j carries the Hermitian
// pair c_{2j-1} = a_j + a_j^dag and c_{2j} = i(a_j - a_j^dag), so
// a_j = (c_{2j-1} - i c_{2j}) / 2. Dirac-form input is converted at the
// boundary and additive constants of Hamiltonians are dropped.

/// Quadratic Hamiltonian H = (i/4) c . h c with h real antisymmetric 2Nx2N.
struct QuadraticHamiltonian {
  RealMatrix h;

  int modes() const { return static_cast<int>(h.rows()) / 2; }
};

/// Linear jump operator L = sum_j coeffs_j c_j, coeffs complex of length 2N.
struct LindbladOperator {
  ComplexVector coeffs;
};

/// Quadratic Hamiltonian plus a (possibly empty) list of linear jumps.
/// The dissipator convention is 2 L rho L^dag - {L^dag L, rho} with no
/// extra 1/2; rates entering as sqrt(gamma) in the jump coefficients decay
/// occupations as exp(-2 gamma t).
struct LindbladModel {
  QuadraticHamiltonian hamiltonian;
  std::vector<LindbladOperator> jumps;

  int modes() const { return hamiltonian.modes(); }
};

/// Hermitian PSD matrix m_{jk} = sum_mu coeffs_{mu,j} conj(coeffs_{mu,k}).
struct BathMatrix {
  ComplexMatrix m;
};

/// Real drift/noise pair of the covariance equation
/// dM/dt = x M + M x^T + y, with y antisymmetric and x + x^T <= 0.
struct DriftNoisePair {
  RealMatrix x;
  RealMatrix y;
};

/// 4Nx4N complex antisymmetric structure matrix of the superoperator
/// generator in the quadratic super-fermion representation.
struct ThirdQuantizedL {
  ComplexMatrix l;
};

/// Validating constructor for a Majorana-form Hamiltonian.
QuadraticHamiltonian hamiltonian_from_majorana(RealMatrix h,
                                               const Tolerances& tol = Tolerances{});

/// Builds h from Dirac-form terms. `energies` are (mode j, e_j) pairs for
/// e_j a_j^dag a_j; `hoppings` are (j, k, t) for t a_j^dag a_k + h.c.;
/// `pairings` are (j, k, s) for s a_j^dag a_k^dag + h.c. Mode indices are
/// 1-based; j != k for hoppings and pairings.
QuadraticHamiltonian hamiltonian_from_dirac(
    int modes, const std::vector<std::pair<int, double>>& energies,
    const std::vector<std::tuple<int, int, Complex>>& hoppings,
    const std::vector<std::tuple<int, int, Complex>>& pairings);

/// Majorana coefficients of L = sum_j adag_coeffs_j a_j^dag + a_coeffs_j a_j.
LindbladOperator jump_from_dirac(int modes, const ComplexVector& adag_coeffs,
                                 const ComplexVector& a_coeffs);

/// Validating constructor for a Majorana-form jump vector.
LindbladOperator jump_from_majorana(ComplexVector coeffs);

BathMatrix bath_matrix(const LindbladModel& model);

/// x = h - 2(m + conj(m)), y = 4i(conj(m) - m), both real; y antisymmetric;
/// x + x^T is negative semidefinite. With no jumps, x = h and y = 0 and the
/// dynamics is the unitary covariance rotation.
DriftNoisePair drift_and_noise(const LindbladModel& model);

/// Structure matrix of the generator. Blocks over Majorana indices a,b
/// (0-based), with m the bath matrix:
///   l(2a,   2b)   = h(a,b) + 2 m(a,b) - 2 m(b,a)
///   l(2a+1, 2b+1) = h(a,b) - 2 m(a,b) + 2 m(b,a)
///   l(2a,   2b+1) = 4i m(a,b)
///   l(2a+1, 2b)   = -4i m(b,a)
/// The generator equals the quadratic form (1/4) chat . l chat minus the
/// scalar 2 tr(m) Id; the scalar cancels in covariance evolution.
ThirdQuantizedL third_quantized_matrix(const LindbladModel& model);

/// l^dag = -conj(l); antisymmetric, an involution.
ThirdQuantizedL adjoint_third_quantized(const ThirdQuantizedL& l);

}  // namespace dflo
