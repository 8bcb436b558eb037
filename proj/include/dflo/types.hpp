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

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace dflo {

using Complex = std::complex<double>;
using RealMatrix = Eigen::MatrixXd;
using ComplexMatrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;
using ComplexVector = Eigen::VectorXcd;

enum class ErrorCode {
  NonSquare,
  IterationLimitExceeded,
  NotAntisymmetric,
  OddDimension,
  SingularSystem,
  IndexOutOfRange,
  SelfHopping,
  LengthMismatch,
  ZeroModes,
  BadBit,
  OddCount,
  NotIncreasing,
  DimensionMismatch,
  NegativeTime,
  TimeTooLarge,
  IllConditionedSpectrum,
  NoUniqueSteadyState,
  ImpossibleOutcome,
  DuplicateMode,
  TooManyModes,
  NonPhysicalResidue,
  NotFinite,
  ParseError,
  ValidationError,
  NumericalError,
};

const char* error_code_name(ErrorCode code);

/// Library error carrying a machine-readable code on top of the message.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

/// Numerical knobs shared across modules. Aggregate-initialize to override
/// individual members; the defaults are sized for double precision with
/// O(n^3) accumulation headroom.
struct Tolerances {
  double schur = 1e-12;       // relative Schur residual
  double eig = 1e-12;         // relative eigendecomposition residual
  double lyap = 1e-10;        // Lyapunov residual bound
  double pf = 1e-9;           // Pf(A)^2 vs det(A) relative
  double asym = 1e-12;        // antisymmetry defect, relative to ||A||_F
  double psd = 1e-10;         // semidefiniteness slack
  double val = 1e-8;          // covariance physicality (|lambda| <= 1 + val)
  double cross = 1e-8;        // backend cross-checks
  double imag = 1e-8;         // discarded imaginary residue
  double p_floor = 1e-12;     // smallest conditionable outcome probability
  double cond_max = 1e10;     // kappa(V) guard for the spectral backend
  double sing = 1e-12;        // shifted-system singularity cut, rel. ||X||_F
  double spectral_zero = 1e-8;          // Re(lambda_a - lambda_b) ~ 0 cut
  double t_max_homogeneous_scale = 20.0;  // admissible t <= scale/max(1,||Z||)
  int oracle_max_modes = 5;

  /// All floating tolerances multiplied by `s` (CLI --tol-scale).
  Tolerances scaled(double s) const;
};

/// Throws NotFinite if the matrix contains NaN or Inf entries.
void require_finite(const RealMatrix& a, const char* what);
void require_finite(const ComplexMatrix& a, const char* what);

/// Throws NonSquare unless rows == cols.
void require_square(Eigen::Index rows, Eigen::Index cols, const char* what);

/// Antisymmetry defect ||A + A^T||_F; throws NotAntisymmetric when it
/// exceeds tol.asym * max(1, ||A||_F).
void require_antisymmetric(const RealMatrix& a, const char* what,
                           const Tolerances& tol = Tolerances{});

}  // namespace dflo
