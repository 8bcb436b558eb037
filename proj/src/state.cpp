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

#include "dflo/state.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "dflo/linalg.hpp"

namespace dflo {

CovarianceMatrix vacuum(int modes) {
  if (modes < 1) {
    throw Error(ErrorCode::ZeroModes, "vacuum: modes < 1");
  }
  return number_state(std::vector<int>(modes, 0));
}

CovarianceMatrix number_state(const std::vector<int>& bits) {
  if (bits.empty()) {
    throw Error(ErrorCode::ZeroModes, "number_state: empty bit list");
  }
  const int n = static_cast<int>(bits.size());
  RealMatrix m = RealMatrix::Zero(2 * n, 2 * n);
  for (int j = 0; j < n; ++j) {
    if (bits[j] != 0 && bits[j] != 1) {
      throw Error(ErrorCode::BadBit,
                  "number_state: bit " + std::to_string(bits[j]) +
                      " at mode " + std::to_string(j + 1));
    }
    m(2 * j, 2 * j + 1) = 1.0 - 2.0 * bits[j];
    m(2 * j + 1, 2 * j) = -(1.0 - 2.0 * bits[j]);
  }
  return CovarianceMatrix{std::move(m)};
}

double occupation(const CovarianceMatrix& state, int mode) {
  if (mode < 1 || mode > state.modes()) {
    throw Error(ErrorCode::IndexOutOfRange,
                "occupation: mode " + std::to_string(mode) + " outside 1.." +
                    std::to_string(state.modes()));
  }
  const double n = 0.5 * (1.0 - state.m(2 * mode - 2, 2 * mode - 1));
  return std::clamp(n, 0.0, 1.0);
}

double wick_moment(const CovarianceMatrix& state,
                   const std::vector<int>& indices, const Tolerances& tol) {
  if (indices.size() % 2 != 0) {
    throw Error(ErrorCode::OddCount, "wick_moment: odd number of indices");
  }
  const int dim = 2 * state.modes();
  for (size_t i = 0; i < indices.size(); ++i) {
    if (indices[i] < 1 || indices[i] > dim) {
      throw Error(ErrorCode::IndexOutOfRange,
                  "wick_moment: index " + std::to_string(indices[i]));
    }
    if (i > 0 && indices[i] <= indices[i - 1]) {
      throw Error(ErrorCode::NotIncreasing,
                  "wick_moment: indices must be strictly increasing");
    }
  }
  const Eigen::Index p = static_cast<Eigen::Index>(indices.size());
  RealMatrix sub(p, p);
  for (Eigen::Index r = 0; r < p; ++r) {
    for (Eigen::Index c = 0; c < p; ++c) {
      sub(r, c) = state.m(indices[r] - 1, indices[c] - 1);
    }
  }
  Tolerances loose = tol;
  loose.asym = std::max(loose.asym, 1e-9);  // evolved states carry roundoff
  return linalg::pfaffian(sub, loose);
}

WilliamsonForm williamson(const CovarianceMatrix& state,
                          const Tolerances& tol) {
  require_antisymmetric(state.m, "williamson", tol);
  const Eigen::Index dim = state.m.rows();
  const int n = state.modes();

  // Real Schur of a normal matrix is block diagonal: 2x2 antisymmetric
  // blocks for +-i v pairs, 1x1 zeros for null directions.
  Eigen::RealSchur<RealMatrix> schur(state.m);
  if (schur.info() != Eigen::Success) {
    throw Error(ErrorCode::IterationLimitExceeded,
                "williamson: Schur iteration did not converge");
  }
  const RealMatrix& t = schur.matrixT();
  RealMatrix q = schur.matrixU();

  struct Block {
    double value;
    Eigen::Index col_a, col_b;
    bool swap;  // swap columns to make the block [[0, v], [-v, 0]], v >= 0
  };
  std::vector<Block> blocks;
  std::vector<Eigen::Index> zero_cols;
  const double zero_cut = 1e3 * tol.asym * std::max(1.0, state.m.norm());
  Eigen::Index i = 0;
  while (i < dim) {
    if (i + 1 < dim && std::abs(t(i + 1, i)) > zero_cut) {
      const double v = 0.5 * (t(i, i + 1) - t(i + 1, i));
      blocks.push_back(v >= 0.0 ? Block{v, i, i + 1, false}
                                : Block{-v, i, i + 1, true});
      i += 2;
    } else {
      zero_cols.push_back(i);
      i += 1;
    }
  }
  for (size_t z = 0; z + 1 < zero_cols.size(); z += 2) {
    blocks.push_back(Block{0.0, zero_cols[z], zero_cols[z + 1], false});
  }
  std::stable_sort(blocks.begin(), blocks.end(),
                   [](const Block& a, const Block& b) { return a.value > b.value; });
  if (blocks.size() != static_cast<size_t>(n)) {
    throw Error(ErrorCode::NumericalError,
                "williamson: Schur form does not split into N canonical blocks");
  }

  WilliamsonForm out;
  out.rotation.resize(dim, dim);
  out.values.resize(n);
  double det_sign = q.determinant() > 0 ? 1.0 : -1.0;
  for (int j = 0; j < n; ++j) {
    const Block& b = blocks[j];
    out.values[j] = b.value;
    out.rotation.col(2 * j) = q.col(b.swap ? b.col_b : b.col_a);
    out.rotation.col(2 * j + 1) = q.col(b.swap ? b.col_a : b.col_b);
    if (b.swap) det_sign = -det_sign;
  }
  if (det_sign < 0) {
    // Restore det = +1 by flipping the least significant block; its value
    // changes sign.
    out.rotation.col(2 * n - 2).swap(out.rotation.col(2 * n - 1));
    out.values[n - 1] = -out.values[n - 1];
  }
  return out;
}

StateDiagnostics validate(const CovarianceMatrix& state, const Tolerances& tol) {
  StateDiagnostics d;
  d.antisymmetry_defect = (state.m + state.m.transpose()).norm();
  // Singular values of a real antisymmetric matrix are the |v_j|, doubled.
  Eigen::JacobiSVD<RealMatrix> svd(state.m);
  const auto& sv = svd.singularValues();
  const double top = sv.size() > 0 ? sv(0) : 0.0;
  d.min_abs_value = sv.size() > 0 ? sv(sv.size() - 1) : 0.0;
  d.value_excess = std::max(0.0, top - 1.0);
  const bool antisym_ok =
      d.antisymmetry_defect <= std::max(tol.val, tol.asym * std::max(1.0, state.m.norm()));
  d.valid = antisym_ok && d.value_excess <= tol.val && state.m.allFinite();
  d.pure = d.valid && d.min_abs_value >= 1.0 - tol.val;
  return d;
}

}  // namespace dflo
