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

/// Gaussian state of N modes, represented by the real antisymmetric 2Nx2N
/// covariance matrix m_{jk} = (i/2) tr(rho [c_j, c_k]). Physicality
/// (spectral norm <= 1, equivalently all Williamson values in [-1, 1])
/// is checked by `validate`, not on every arithmetic step.
struct CovarianceMatrix {
  RealMatrix m;

  int modes() const { return static_cast<int>(m.rows()) / 2; }
};

/// m = rotation . blockdiag([[0, v_j], [-v_j, 0]]) . rotation^T with
/// rotation in SO(2N). Values are sorted by non-increasing |v_j|; signs are
/// non-negative except possibly the last, which absorbs the det(R) = +1
/// constraint.
struct WilliamsonForm {
  RealMatrix rotation;
  std::vector<double> values;
};

struct StateDiagnostics {
  double antisymmetry_defect = 0.0;  // ||m + m^T||_F
  double value_excess = 0.0;         // max(0, max_j |v_j| - 1)
  double min_abs_value = 0.0;        // min_j |v_j|
  bool valid = false;
  bool pure = false;                 // all |v_j| = 1 within tolerance
};

/// Covariance of |0...0>: canonical blocks with m_{2j-1,2j} = +1.
CovarianceMatrix vacuum(int modes);

/// Covariance of the number state |bits>: m_{2j-1,2j} = 1 - 2 bits_j.
CovarianceMatrix number_state(const std::vector<int>& bits);

/// Occupation expectation <n_j> = (1 - m_{2j-1,2j})/2, clamped to [0,1].
/// Mode index is 1-based.
double occupation(const CovarianceMatrix& state, int mode);

/// i^p tr(rho c_{j_1} ... c_{j_2p}) as the Pfaffian of the indexed
/// submatrix. Indices are 1-based Majorana indices, strictly increasing,
/// of even count.
double wick_moment(const CovarianceMatrix& state,
                   const std::vector<int>& indices,
                   const Tolerances& tol = Tolerances{});

/// Block-diagonalization by a special orthogonal rotation.
WilliamsonForm williamson(const CovarianceMatrix& state,
                          const Tolerances& tol = Tolerances{});

/// Never throws; reports antisymmetry defect, eigenvalue excess and purity.
StateDiagnostics validate(const CovarianceMatrix& state,
                          const Tolerances& tol = Tolerances{});

}  // namespace dflo
