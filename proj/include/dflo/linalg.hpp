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

#include "dflo/types.hpp"

namespace dflo::linalg {

/// Complex Schur form A = U T U^dagger with T upper triangular (entries
/// below the diagonal are exactly zero) and U unitary.
struct SchurForm {
  ComplexMatrix unitary;
  ComplexMatrix triangular;
};

SchurForm schur_decompose(const ComplexMatrix& a);
SchurForm schur_decompose(const RealMatrix& a);

/// A = V diag(values) V^{-1} with a 1-norm condition estimate for V.
struct EigenDecomposition {
  ComplexVector values;
  ComplexMatrix vectors;
  ComplexMatrix inverse_vectors;
  double condition_estimate = 0.0;
};

EigenDecomposition eigen_decompose(const ComplexMatrix& a);

/// exp(a*t) by scaling-and-squaring with diagonal Pade approximation.
RealMatrix matrix_exp(const RealMatrix& a, double t = 1.0);
ComplexMatrix matrix_exp(const ComplexMatrix& a, double t = 1.0);

/// Pfaffian of a real antisymmetric matrix of even dimension, via
/// Householder reduction to tridiagonal form. Pf(A)^2 = det(A).
double pfaffian(const RealMatrix& a, const Tolerances& tol = Tolerances{});

/// Solves X M + M X^T + Y = 0 for real antisymmetric M, given real X and
/// real antisymmetric Y. Schur form of X, then back-substitution column by
/// column on the shifted triangular systems; the complex solution is
/// projected back to a real antisymmetric one. O(n^3).
///
/// Throws SingularSystem when some eigenvalue pair satisfies
/// lambda_i + conj(lambda_m) ~ 0 (no unique solution; e.g. purely unitary
/// dynamics).
RealMatrix solve_lyapunov(const RealMatrix& x, const RealMatrix& y,
                          const Tolerances& tol = Tolerances{});

/// Minimum-norm least-squares particular solution of the same equation on
/// the n(n-1)/2 upper-triangle unknowns. Intended for small singular but
/// consistent systems; `residual`, when given, receives
/// ||X M + M X^T + Y||_F of the returned M.
RealMatrix solve_lyapunov_least_squares(const RealMatrix& x,
                                        const RealMatrix& y,
                                        double* residual = nullptr);

/// Largest singular value (spectral norm).
double spectral_norm(const RealMatrix& a);
double spectral_norm(const ComplexMatrix& a);

}  // namespace dflo::linalg
