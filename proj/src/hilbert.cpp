// Copyright 2026 The onticlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "onticlab/hilbert.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "onticlab/errors.hpp"

namespace onticlab {
namespace {

constexpr double kNormTolerance = 1e-8;
constexpr double kHermitianTolerance = 1e-12;
constexpr double kUnitaryTolerance = 1e-10;

void require_dimension(int n) {
  if (n < 2) {
    throw std::invalid_argument("Hilbert space dimension must be >= 2, got " +
                                std::to_string(n));
  }
}

void require_same_dimension(int a, int b) {
  if (a != b) {
    throw DimensionMismatch("incompatible Hilbert spaces: dimension " +
                            std::to_string(a) + " vs " + std::to_string(b));
  }
}

void require_qubit(const QuantumState& psi) {
  if (psi.dimension() != 2) {
    throw std::invalid_argument("operation requires a two-state system, got N = " +
                                std::to_string(psi.dimension()));
  }
}

}  // namespace

QuantumState::QuantumState(ComplexVector amplitudes) : amplitudes_(std::move(amplitudes)) {
  require_dimension(static_cast<int>(amplitudes_.size()));
  if (!amplitudes_.allFinite()) {
    throw std::invalid_argument("state amplitudes must be finite");
  }
  const double norm2 = amplitudes_.squaredNorm();
  if (std::abs(norm2 - 1.0) > kNormTolerance) {
    throw std::invalid_argument("state is not normalized: squared norm " +
                                std::to_string(norm2));
  }
  amplitudes_ /= std::sqrt(norm2);
}

QuantumState QuantumState::normalized(ComplexVector v) {
  const double norm = v.norm();
  if (!(norm > 0.0) || !std::isfinite(norm)) {
    throw std::invalid_argument("cannot normalize a zero or non-finite vector");
  }
  v /= norm;
  return QuantumState(std::move(v));
}

QuantumState QuantumState::basis(int dimension, int index) {
  require_dimension(dimension);
  if (index < 0 || index >= dimension) {
    throw std::out_of_range("basis index out of range");
  }
  ComplexVector v = ComplexVector::Zero(dimension);
  v(index) = 1.0;
  return QuantumState(std::move(v));
}

HermitianOp::HermitianOp(ComplexMatrix matrix) : matrix_(std::move(matrix)) {
  if (matrix_.rows() != matrix_.cols()) {
    throw std::invalid_argument("operator matrix must be square");
  }
  if (!matrix_.allFinite()) {
    throw std::invalid_argument("operator entries must be finite");
  }
  const double scale = std::max(1.0, matrix_.cwiseAbs().maxCoeff());
  if (max_abs_difference(matrix_, matrix_.adjoint()) > kHermitianTolerance * scale) {
    throw std::invalid_argument("operator is not Hermitian");
  }
}

HermitianOp HermitianOp::zero(int dimension) {
  require_dimension(dimension);
  return HermitianOp(ComplexMatrix::Zero(dimension, dimension));
}

UnitaryOp::UnitaryOp(ComplexMatrix matrix) : matrix_(std::move(matrix)) {
  if (matrix_.rows() != matrix_.cols()) {
    throw std::invalid_argument("operator matrix must be square");
  }
  const auto n = matrix_.rows();
  if (max_abs_difference(matrix_ * matrix_.adjoint(), ComplexMatrix::Identity(n, n)) >
      kUnitaryTolerance) {
    throw std::invalid_argument("operator is not unitary");
  }
}

UnitaryOp UnitaryOp::identity(int dimension) {
  require_dimension(dimension);
  return UnitaryOp(ComplexMatrix::Identity(dimension, dimension));
}

UnitaryOp UnitaryOp::adjoint() const { return UnitaryOp(matrix_.adjoint()); }

UnitaryOp operator*(const UnitaryOp& a, const UnitaryOp& b) {
  require_same_dimension(a.dimension(), b.dimension());
  return UnitaryOp(a.matrix() * b.matrix());
}

Complex inner(const QuantumState& phi, const QuantumState& psi) {
  require_same_dimension(phi.dimension(), psi.dimension());
  // Eigen's dot() conjugates the first argument.
  return phi.amplitudes().dot(psi.amplitudes());
}

double born_probability(const QuantumState& phi, const QuantumState& psi) {
  return std::min(1.0, std::norm(inner(phi, psi)));
}

bool same_ray(const QuantumState& a, const QuantumState& b, double tolerance) {
  return 1.0 - std::abs(inner(a, b)) < tolerance;
}

BlochVector bloch_vector(const QuantumState& psi) {
  require_qubit(psi);
  const Complex down = psi[0];  // psi_{-1}
  const Complex up = psi[1];    // psi_1
  const Complex cross = std::conj(down) * up;
  return {Eigen::Vector3d(2.0 * cross.real(), 2.0 * cross.imag(),
                          std::norm(down) - std::norm(up))};
}

QuantumState state_from_bloch(const Eigen::Vector3d& w) {
  const double norm = w.norm();
  if (std::abs(norm - 1.0) > 1e-10) {
    throw std::invalid_argument("Bloch vector of a pure state must have unit length");
  }
  const Eigen::Vector3d u = w / norm;
  // Polar angle from +z, azimuth from +x.
  const double theta = std::acos(std::clamp(u.z(), -1.0, 1.0));
  const double phi = std::atan2(u.y(), u.x());
  ComplexVector v(2);
  v(0) = std::cos(theta / 2.0);
  v(1) = std::polar(std::sin(theta / 2.0), phi);
  return QuantumState::normalized(std::move(v));
}

QuantumState orthogonal_state(const QuantumState& psi) {
  require_qubit(psi);
  ComplexVector v(2);
  v(0) = -std::conj(psi[1]);
  v(1) = std::conj(psi[0]);
  return QuantumState(std::move(v));
}

HermitianOp pauli(int k) {
  using namespace std::complex_literals;
  ComplexMatrix m(2, 2);
  switch (k) {
    case 1:
      m << 0.0, 1.0, 1.0, 0.0;
      break;
    case 2:
      m << 0.0, -1i, 1i, 0.0;
      break;
    case 3:
      m << 1.0, 0.0, 0.0, -1.0;
      break;
    default:
      throw std::out_of_range("Pauli index must be 1, 2 or 3");
  }
  return HermitianOp(std::move(m));
}

UnitaryOp unitary_from_hamiltonian(const HermitianOp& hamiltonian, double t) {
  if (!std::isfinite(t)) {
    throw std::invalid_argument("evolution time must be finite");
  }
  const Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(hamiltonian.matrix());
  if (eig.info() != Eigen::Success) {
    throw std::runtime_error("Hermitian eigendecomposition failed");
  }
  const auto& energies = eig.eigenvalues();
  ComplexVector phases(energies.size());
  for (Eigen::Index k = 0; k < energies.size(); ++k) {
    phases(k) = std::polar(1.0, -energies(k) * t);
  }
  const ComplexMatrix& v = eig.eigenvectors();
  return UnitaryOp(v * phases.asDiagonal() * v.adjoint());
}

QuantumState evolve_state(const QuantumState& psi, const UnitaryOp& u) {
  require_same_dimension(psi.dimension(), u.dimension());
  return QuantumState(u.matrix() * psi.amplitudes());
}

QuantumState random_state(int dimension, RandomStream& rng) {
  require_dimension(dimension);
  ComplexVector v(dimension);
  for (int k = 0; k < dimension; ++k) {
    v(k) = rng.complex_normal();
  }
  return QuantumState::normalized(std::move(v));
}

QuantumState random_orthogonal_state(const QuantumState& psi, RandomStream& rng) {
  for (;;) {
    ComplexVector v(psi.dimension());
    for (int k = 0; k < psi.dimension(); ++k) {
      v(k) = rng.complex_normal();
    }
    v -= psi.amplitudes().dot(v) * psi.amplitudes();
    if (v.norm() > 1e-6) {
      v /= v.norm();
      // A second projection removes the residual overlap left by rounding.
      v -= psi.amplitudes().dot(v) * psi.amplitudes();
      return QuantumState::normalized(std::move(v));
    }
  }
}

UnitaryOp random_unitary(int dimension, RandomStream& rng) {
  require_dimension(dimension);
  ComplexMatrix z(dimension, dimension);
  for (int j = 0; j < dimension; ++j) {
    for (int i = 0; i < dimension; ++i) {
      z(i, j) = rng.complex_normal();
    }
  }
  const Eigen::HouseholderQR<ComplexMatrix> qr(z);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix& r = qr.matrixQR();
  for (int j = 0; j < dimension; ++j) {
    const double mag = std::abs(r(j, j));
    if (mag > 0.0) {
      q.col(j) *= r(j, j) / mag;
    }
  }
  return UnitaryOp(std::move(q));
}

double max_abs_difference(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionMismatch("matrix shapes differ");
  }
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace onticlab
