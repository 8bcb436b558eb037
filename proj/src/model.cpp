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

#include "dflo/model.hpp"

#include <tuple>
#include <utility>

namespace dflo {

namespace {

void check_mode_index(int j, int modes, const char* what) {
  if (j < 1 || j > modes) {
    throw Error(ErrorCode::IndexOutOfRange,
                std::string(what) + ": mode " + std::to_string(j) +
                    " outside 1.." + std::to_string(modes));
  }
}

}  // namespace

QuadraticHamiltonian hamiltonian_from_majorana(RealMatrix h,
                                               const Tolerances& tol) {
  require_finite(h, "hamiltonian_from_majorana");
  require_antisymmetric(h, "hamiltonian_from_majorana", tol);
  if (h.rows() % 2 != 0) {
    throw Error(ErrorCode::OddDimension,
                "hamiltonian_from_majorana: dimension must be 2N");
  }
  return QuadraticHamiltonian{std::move(h)};
}

QuadraticHamiltonian hamiltonian_from_dirac(
    int modes, const std::vector<std::pair<int, double>>& energies,
    const std::vector<std::tuple<int, int, Complex>>& hoppings,
    const std::vector<std::tuple<int, int, Complex>>& pairings) {
  if (modes < 1) {
    throw Error(ErrorCode::ZeroModes, "hamiltonian_from_dirac: modes < 1");
  }
  RealMatrix h = RealMatrix::Zero(2 * modes, 2 * modes);

  for (const auto& [j, e] : energies) {
    check_mode_index(j, modes, "hamiltonian_from_dirac energy");
    // e a^dag a = const - (i e / 2) c_{2j-1} c_{2j}
    h(2 * j - 2, 2 * j - 1) += -e;
  }
  for (auto [j, k, t] : hoppings) {
    check_mode_index(j, modes, "hamiltonian_from_dirac hopping");
    check_mode_index(k, modes, "hamiltonian_from_dirac hopping");
    if (j == k) {
      throw Error(ErrorCode::SelfHopping,
                  "hamiltonian_from_dirac: hopping with j == k");
    }
    if (j > k) {  // t a_j^dag a_k + h.c. == conj(t) a_k^dag a_j + h.c.
      std::swap(j, k);
      t = std::conj(t);
    }
    const Eigen::Index r = 2 * j - 2, s = 2 * k - 2;
    h(r, s) += t.imag();
    h(r, s + 1) += -t.real();
    h(r + 1, s) += t.real();
    h(r + 1, s + 1) += t.imag();
  }
  for (auto [j, k, s] : pairings) {
    check_mode_index(j, modes, "hamiltonian_from_dirac pairing");
    check_mode_index(k, modes, "hamiltonian_from_dirac pairing");
    if (j == k) {
      throw Error(ErrorCode::SelfHopping,
                  "hamiltonian_from_dirac: pairing with j == k");
    }
    if (j > k) {  // a_j^dag a_k^dag antisymmetric under j <-> k
      std::swap(j, k);
      s = -s;
    }
    const Eigen::Index r = 2 * j - 2, c = 2 * k - 2;
    h(r, c) += s.imag();
    h(r, c + 1) += s.real();
    h(r + 1, c) += s.real();
    h(r + 1, c + 1) += -s.imag();
  }

  // Upper triangle filled; mirror.
  RealMatrix upper = h.triangularView<Eigen::StrictlyUpper>();
  h = upper - upper.transpose();
  return QuadraticHamiltonian{std::move(h)};
}

LindbladOperator jump_from_dirac(int modes, const ComplexVector& adag_coeffs,
                                 const ComplexVector& a_coeffs) {
  if (adag_coeffs.size() != modes || a_coeffs.size() != modes) {
    throw Error(ErrorCode::LengthMismatch,
                "jump_from_dirac: coefficient vectors must have length N");
  }
  ComplexVector ell(2 * modes);
  const Complex i(0.0, 1.0);
  for (int j = 0; j < modes; ++j) {
    // a = (c_{2j-1} - i c_{2j})/2, a^dag = (c_{2j-1} + i c_{2j})/2
    ell(2 * j) = 0.5 * (adag_coeffs(j) + a_coeffs(j));
    ell(2 * j + 1) = 0.5 * i * (adag_coeffs(j) - a_coeffs(j));
  }
  return LindbladOperator{std::move(ell)};
}

LindbladOperator jump_from_majorana(ComplexVector coeffs) {
  if (coeffs.size() % 2 != 0) {
    throw Error(ErrorCode::LengthMismatch,
                "jump_from_majorana: coefficient vector must have length 2N");
  }
  if (!coeffs.allFinite()) {
    throw Error(ErrorCode::NotFinite, "jump_from_majorana: non-finite entries");
  }
  return LindbladOperator{std::move(coeffs)};
}

BathMatrix bath_matrix(const LindbladModel& model) {
  const Eigen::Index dim = 2 * model.modes();
  ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
  for (const auto& jump : model.jumps) {
    if (jump.coeffs.size() != dim) {
      throw Error(ErrorCode::LengthMismatch,
                  "bath_matrix: jump vector length does not match 2N");
    }
    m.noalias() += jump.coeffs * jump.coeffs.adjoint();
  }
  return BathMatrix{std::move(m)};
}

DriftNoisePair drift_and_noise(const LindbladModel& model) {
  const BathMatrix bath = bath_matrix(model);
  // m + conj(m) = 2 Re(m) and 4i(conj(m) - m) = 8 Im(m), both exactly real.
  DriftNoisePair out;
  out.x = model.hamiltonian.h - 4.0 * bath.m.real();
  out.y = 8.0 * bath.m.imag();
  return out;
}

ThirdQuantizedL third_quantized_matrix(const LindbladModel& model) {
  const Eigen::Index dim = 2 * model.modes();
  const BathMatrix bath = bath_matrix(model);
  const ComplexMatrix& m = bath.m;
  const ComplexMatrix h = model.hamiltonian.h.cast<Complex>();
  const Complex i4(0.0, 4.0);
  ComplexMatrix l = ComplexMatrix::Zero(2 * dim, 2 * dim);
  for (Eigen::Index a = 0; a < dim; ++a) {
    for (Eigen::Index b = 0; b < dim; ++b) {
      l(2 * a, 2 * b) = h(a, b) + 2.0 * m(a, b) - 2.0 * m(b, a);
      l(2 * a + 1, 2 * b + 1) = h(a, b) - 2.0 * m(a, b) + 2.0 * m(b, a);
      l(2 * a, 2 * b + 1) = i4 * m(a, b);
      l(2 * a + 1, 2 * b) = -i4 * m(b, a);
    }
  }
  return ThirdQuantizedL{std::move(l)};
}

ThirdQuantizedL adjoint_third_quantized(const ThirdQuantizedL& l) {
  return ThirdQuantizedL{-l.l.conjugate()};
}

}  // namespace dflo
