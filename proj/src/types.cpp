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

#include "dflo/types.hpp"

#include <algorithm>

namespace dflo {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonSquare: return "NonSquare";
    case ErrorCode::IterationLimitExceeded: return "IterationLimitExceeded";
    case ErrorCode::NotAntisymmetric: return "NotAntisymmetric";
    case ErrorCode::OddDimension: return "OddDimension";
    case ErrorCode::SingularSystem: return "SingularSystem";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::SelfHopping: return "SelfHopping";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::ZeroModes: return "ZeroModes";
    case ErrorCode::BadBit: return "BadBit";
    case ErrorCode::OddCount: return "OddCount";
    case ErrorCode::NotIncreasing: return "NotIncreasing";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NegativeTime: return "NegativeTime";
    case ErrorCode::TimeTooLarge: return "TimeTooLarge";
    case ErrorCode::IllConditionedSpectrum: return "IllConditionedSpectrum";
    case ErrorCode::NoUniqueSteadyState: return "NoUniqueSteadyState";
    case ErrorCode::ImpossibleOutcome: return "ImpossibleOutcome";
    case ErrorCode::DuplicateMode: return "DuplicateMode";
    case ErrorCode::TooManyModes: return "TooManyModes";
    case ErrorCode::NonPhysicalResidue: return "NonPhysicalResidue";
    case ErrorCode::NotFinite: return "NotFinite";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ValidationError: return "ValidationError";
    case ErrorCode::NumericalError: return "NumericalError";
  }
  return "Unknown";
}

Tolerances Tolerances::scaled(double s) const {
  Tolerances t = *this;
  t.schur *= s;
  t.eig *= s;
  t.lyap *= s;
  t.pf *= s;
  t.asym *= s;
  t.psd *= s;
  t.val *= s;
  t.cross *= s;
  t.imag *= s;
  return t;
}

void require_finite(const RealMatrix& a, const char* what) {
  if (!a.allFinite()) {
    throw Error(ErrorCode::NotFinite, std::string(what) + ": non-finite entries");
  }
}

void require_finite(const ComplexMatrix& a, const char* what) {
  if (!a.allFinite()) {
    throw Error(ErrorCode::NotFinite, std::string(what) + ": non-finite entries");
  }
}

void require_square(Eigen::Index rows, Eigen::Index cols, const char* what) {
  if (rows != cols) {
    throw Error(ErrorCode::NonSquare, std::string(what) + ": matrix is " +
                                          std::to_string(rows) + "x" +
                                          std::to_string(cols));
  }
}

void require_antisymmetric(const RealMatrix& a, const char* what,
                           const Tolerances& tol) {
  require_square(a.rows(), a.cols(), what);
  const double defect = (a + a.transpose()).norm();
  if (defect > tol.asym * std::max(1.0, a.norm())) {
    throw Error(ErrorCode::NotAntisymmetric,
                std::string(what) + ": antisymmetry defect " +
                    std::to_string(defect));
  }
}

}  // namespace dflo
