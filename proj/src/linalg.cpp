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

#include "dflo/linalg.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <unsupported/Eigen/MatrixFunctions>

namespace dflo::linalg {

SchurForm schur_decompose(const ComplexMatrix& a) {
  require_square(a.rows(), a.cols(), "schur_decompose");
  require_finite(a, "schur_decompose");
  Eigen::ComplexSchur<ComplexMatrix> schur(a.rows());
  schur.compute(a, /*computeU=*/true);
  if (schur.info() != Eigen::Success) {
    throw Error(ErrorCode::IterationLimitExceeded,
                "schur_decompose: QR iteration did not converge within the "
                "sweep budget");
  }
  SchurForm out;
  out.unitary = schur.matrixU();
  out.triangular = schur.matrixT().triangularView<Eigen::Upper>();
  return out;
}

SchurForm schur_decompose(const RealMatrix& a) {
  return schur_decompose(ComplexMatrix(a.cast<Complex>()));
}

EigenDecomposition eigen_decompose(const ComplexMatrix& a) {
  require_square(a.rows(), a.cols(), "eigen_decompose");
  require_finite(a, "eigen_decompose");
  Eigen::ComplexEigenSolver<ComplexMatrix> solver(a, /*computeEigenvectors=*/true);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::IterationLimitExceeded,
                "eigen_decompose: QR iteration did not converge");
  }
  EigenDecomposition out;
  out.values = solver.eigenvalues();
  out.vectors = solver.eigenvectors();
  Eigen::PartialPivLU<ComplexMatrix> lu(out.vectors);
  out.inverse_vectors = lu.inverse();
  const double rcond = lu.rcond();
  out.condition_estimate =
      rcond > 0.0 ? 1.0 / rcond : std::numeric_limits<double>::infinity();
  return out;
}

RealMatrix matrix_exp(const RealMatrix& a, double t) {
  require_square(a.rows(), a.cols(), "matrix_exp");
  require_finite(a, "matrix_exp");
  if (!std::isfinite(t)) {
    throw Error(ErrorCode::NotFinite, "matrix_exp: non-finite time");
  }
  return (a * t).exp();
}

ComplexMatrix matrix_exp(const ComplexMatrix& a, double t) {
  require_square(a.rows(), a.cols(), "matrix_exp");
  require_finite(a, "matrix_exp");
  if (!std::isfinite(t)) {
    throw Error(ErrorCode::NotFinite, "matrix_exp: non-finite time");
  }
  return (a * t).exp();
}

double pfaffian(const RealMatrix& a, const Tolerances& tol) {
  require_square(a.rows(), a.cols(), "pfaffian");
  const Eigen::Index n = a.rows();
  if (n % 2 != 0) {
    throw Error(ErrorCode::OddDimension,
                "pfaffian: dimension " + std::to_string(n) + " is odd");
  }
  require_finite(a, "pfaffian");
  require_antisymmetric(a, "pfaffian", tol);
  if (n == 0) {
    return 1.0;
  }

  // Householder reduction to tridiagonal form. Each reflector applied as a
  // congruence flips the Pfaffian sign once; the tridiagonal Pfaffian is the
  // product of every other superdiagonal entry.
  RealMatrix w = a;
  double sign = 1.0;
  for (Eigen::Index k = 0; k + 2 < n; ++k) {
    const Eigen::Index m = n - k - 1;
    RealVector x = w.col(k).segment(k + 1, m);
    const double xnorm = x.norm();
    if (xnorm == 0.0) {
      continue;  // column already reduced
    }
    RealVector v = x;
    const double alpha = (x(0) >= 0.0 ? -xnorm : xnorm);
    v(0) -= alpha;
    const double vnorm = v.norm();
    if (vnorm <= 1e-300) {
      continue;
    }
    v /= vnorm;
    // w <- P w P with P = I - 2 v v^T acting on the trailing index range
    RealMatrix wb = w.block(k + 1, 0, m, n);
    wb -= 2.0 * v * (v.transpose() * wb);
    w.block(k + 1, 0, m, n) = wb;
    RealMatrix wc = w.block(0, k + 1, n, m);
    wc -= 2.0 * (wc * v) * v.transpose();
    w.block(0, k + 1, n, m) = wc;
    sign = -sign;
  }

  double pf = sign;
  for (Eigen::Index i = 0; i + 1 < n; i += 2) {
    pf *= 0.5 * (w(i, i + 1) - w(i + 1, i));
  }
  return pf;
}

namespace {

// Back-substitution on T K + K T^dagger + Yt = 0 with T upper triangular.
ComplexMatrix solve_triangular_lyapunov(const ComplexMatrix& t,
                                        const ComplexMatrix& yt,
                                        double singular_cut) {
  const Eigen::Index n = t.rows();
  ComplexMatrix k = ComplexMatrix::Zero(n, n);
  for (Eigen::Index m = n - 1; m >= 0; --m) {
    ComplexVector rhs = -yt.col(m);
    for (Eigen::Index j = m + 1; j < n; ++j) {
      rhs -= std::conj(t(m, j)) * k.col(j);
    }
    ComplexMatrix shifted = t;
    shifted.diagonal().array() += std::conj(t(m, m));
    const double min_diag = shifted.diagonal().cwiseAbs().minCoeff();
    if (min_diag <= singular_cut) {
      throw Error(ErrorCode::SingularSystem,
                  "solve_lyapunov: eigenvalue pair with lambda_i + "
                  "conj(lambda_m) ~ 0; no unique solution");
    }
    k.col(m) =
        shifted.triangularView<Eigen::Upper>().solve(rhs);
  }
  return k;
}

}  // namespace

RealMatrix solve_lyapunov(const RealMatrix& x, const RealMatrix& y,
                          const Tolerances& tol) {
  require_square(x.rows(), x.cols(), "solve_lyapunov");
  if (y.rows() != x.rows() || y.cols() != x.cols()) {
    throw Error(ErrorCode::DimensionMismatch,
                "solve_lyapunov: X and Y sizes differ");
  }
  require_finite(x, "solve_lyapunov");
  require_antisymmetric(y, "solve_lyapunov Y", tol);

  const SchurForm schur = schur_decompose(x);
  const ComplexMatrix& u = schur.unitary;
  const ComplexMatrix& t = schur.triangular;
  const ComplexMatrix yt = u.adjoint() * y.cast<Complex>() * u;
  const double singular_cut = tol.sing * std::max(1.0, x.norm());
  const ComplexMatrix k = solve_triangular_lyapunov(t, yt, singular_cut);
  const ComplexMatrix m = u * k * u.adjoint();
  // Real and antisymmetric parts are themselves solutions; project.
  const RealMatrix mr = m.real();
  return 0.5 * (mr - mr.transpose());
}

RealMatrix solve_lyapunov_least_squares(const RealMatrix& x,
                                        const RealMatrix& y,
                                        double* residual) {
  require_square(x.rows(), x.cols(), "solve_lyapunov_least_squares");
  const Eigen::Index n = x.rows();
  const Eigen::Index p = n * (n - 1) / 2;
  // Unknowns: m_{ij} for i<j; equations: entry (i,j), i<j, of X M + M X^T + Y.
  auto flat = [n](Eigen::Index i, Eigen::Index j) {
    return i * n - i * (i + 1) / 2 + (j - i - 1);
  };
  RealMatrix sys = RealMatrix::Zero(p, p);
  RealVector rhs(p);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const Eigen::Index row = flat(i, j);
      rhs(row) = -y(i, j);
      for (Eigen::Index k = 0; k < n; ++k) {
        // X_{ik} M_{kj} with M_{kj} = +-m_{(min,max)}
        if (k < j) {
          sys(row, flat(k, j)) += x(i, k);
        } else if (k > j) {
          sys(row, flat(j, k)) -= x(i, k);
        }
        // M_{ik} X_{jk}
        if (k > i) {
          sys(row, flat(i, k)) += x(j, k);
        } else if (k < i) {
          sys(row, flat(k, i)) -= x(j, k);
        }
      }
    }
  }
  Eigen::CompleteOrthogonalDecomposition<RealMatrix> cod(sys);
  const RealVector sol = cod.solve(rhs);
  RealMatrix m = RealMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      m(i, j) = sol(flat(i, j));
      m(j, i) = -m(i, j);
    }
  }
  if (residual != nullptr) {
    *residual = (x * m + m * x.transpose() + y).norm();
  }
  return m;
}

double spectral_norm(const RealMatrix& a) {
  if (a.size() == 0) return 0.0;
  return a.jacobiSvd().singularValues()(0);
}

double spectral_norm(const ComplexMatrix& a) {
  if (a.size() == 0) return 0.0;
  return a.jacobiSvd().singularValues()(0);
}

}  // namespace dflo::linalg
