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

#include "dflo/model.hpp"
#include "dflo/state.hpp"
#include "dflo/types.hpp"

// Brute-force reference implementation on full 2^N-dimensional density
// matrices (N <= oracle_max_modes). It never touches the covariance fast
// paths, so agreement tests against `state`/`evolve`/`measure` are
// genuinely independent.

namespace dflo::oracle {

/// Jordan-Wigner matrix of the Majorana operator c_index, index in 1..2N.
ComplexMatrix majorana_operator(int modes, int index);

/// Annihilation operator a_j = (c_{2j-1} - i c_{2j}) / 2, j in 1..N.
ComplexMatrix dirac_annihilation(int modes, int mode);

/// Dense (i/4) c . h c for a Majorana-form Hamiltonian.
ComplexMatrix dense_hamiltonian(const QuadraticHamiltonian& hamiltonian);

/// Dense sum_j coeffs_j c_j for a jump operator.
ComplexMatrix dense_jump(const LindbladOperator& jump, int modes);

/// |bits><bits| as a density matrix.
ComplexMatrix dense_number_state(const std::vector<int>& bits);

/// Gaussian density matrix 2^{-N} prod_j (I + i v_j c'_{2j-1} c'_{2j})
/// with rotated modes c'_a = sum_b rotation_{a,b} c_b.
ComplexMatrix dense_gaussian(const RealMatrix& rotation,
                             const std::vector<double>& values);

/// Evolves rho under the master equation
///   d rho/dt = -i[H, rho] + sum_mu (2 L rho L^dag - {L^dag L, rho})
/// by exponentiating the vectorized generator; falls back to adaptive
/// Runge-Kutta integration for stiff models (jump norms > 10).
ComplexMatrix dense_lindblad_evolve(const ComplexMatrix& rho,
                                    const LindbladModel& model, double t,
                                    const Tolerances& tol = Tolerances{});

/// Covariance matrix m_{jk} = (i/2) tr(rho [c_j, c_k]); throws
/// NonPhysicalResidue if the imaginary residue exceeds tolerance.
CovarianceMatrix dense_covariance(const ComplexMatrix& rho,
                                  const Tolerances& tol = Tolerances{});

/// Exact joint occupation statistics for an ordered list of modes.
struct DenseMeasurement {
  std::vector<std::vector<int>> outcomes;      // one bit vector per branch
  std::vector<double> probabilities;           // sums to 1
  std::vector<ComplexMatrix> post_states;      // conditional density matrices
};

DenseMeasurement dense_measure_distribution(const ComplexMatrix& rho,
                                            const std::vector<int>& modes,
                                            const Tolerances& tol = Tolerances{});

/// Max over all increasing index tuples of size 2p <= max_order of
/// |i^p tr(rho c_{j1} ... c_{j2p}) - Pf(m[j1..j2p])|.
double wick_check(const ComplexMatrix& rho, const CovarianceMatrix& m,
                  int max_order, const Tolerances& tol = Tolerances{});

}  // namespace dflo::oracle
