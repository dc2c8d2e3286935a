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

#pragma once

#include <complex>

#include <Eigen/Dense>

#include "onticlab/random.hpp"

namespace onticlab {

using Complex = std::complex<double>;
using ComplexVector = Eigen::VectorXcd;
using ComplexMatrix = Eigen::MatrixXcd;

/// Normalized pure state of an N-dimensional system, N >= 2.
///
/// For N = 2 the ordered basis is (|-1>, |1>): amplitude 0 is psi_{-1} and
/// amplitude 1 is psi_1.
class QuantumState {
 public:
  /// Accepts amplitudes whose squared norm is within 1e-8 of one and rescales
  /// them to unit norm. Throws std::invalid_argument otherwise or when N < 2.
  explicit QuantumState(ComplexVector amplitudes);

  /// Normalizes an arbitrary nonzero vector.
  static QuantumState normalized(ComplexVector v);

  /// Basis vector |index> (0-based) of an N-dimensional space.
  static QuantumState basis(int dimension, int index);

  int dimension() const noexcept { return static_cast<int>(amplitudes_.size()); }
  const ComplexVector& amplitudes() const noexcept { return amplitudes_; }
  Complex operator[](int k) const { return amplitudes_(k); }

 private:
  ComplexVector amplitudes_;
};

/// Hermitian operator; the constructor rejects matrices that differ from their
/// adjoint by more than 1e-12 (relative to the largest entry).
class HermitianOp {
 public:
  explicit HermitianOp(ComplexMatrix matrix);

  static HermitianOp zero(int dimension);

  int dimension() const noexcept { return static_cast<int>(matrix_.rows()); }
  const ComplexMatrix& matrix() const noexcept { return matrix_; }

 private:
  ComplexMatrix matrix_;
};

/// Unitary operator; U U^dagger equals the identity within 1e-10 (max-norm).
class UnitaryOp {
 public:
  explicit UnitaryOp(ComplexMatrix matrix);

  static UnitaryOp identity(int dimension);

  int dimension() const noexcept { return static_cast<int>(matrix_.rows()); }
  const ComplexMatrix& matrix() const noexcept { return matrix_; }

  UnitaryOp adjoint() const;

 private:
  ComplexMatrix matrix_;
};

/// Operator product: (a * b) applies b first, then a.
UnitaryOp operator*(const UnitaryOp& a, const UnitaryOp& b);

/// Bloch vector of a qubit state.
struct BlochVector {
  Eigen::Vector3d w;
};

/// <phi|psi> = sum_k conj(phi_k) psi_k.
Complex inner(const QuantumState& phi, const QuantumState& psi);

/// |<phi|psi>|^2.
double born_probability(const QuantumState& phi, const QuantumState& psi);

/// True when the two states differ only by a global phase:
/// 1 - |<a|b>| < tolerance.
bool same_ray(const QuantumState& a, const QuantumState& b, double tolerance = 1e-10);

/// w1 = 2 Re(psi_{-1}^* psi_1), w2 = 2 Im(psi_{-1}^* psi_1),
/// w3 = |psi_{-1}|^2 - |psi_1|^2. Requires N = 2.
BlochVector bloch_vector(const QuantumState& psi);

/// A qubit state whose Bloch vector is the given unit vector.
QuantumState state_from_bloch(const Eigen::Vector3d& w);

/// The qubit state orthogonal to psi (antipodal Bloch vector). Requires N = 2.
QuantumState orthogonal_state(const QuantumState& psi);

/// Pauli matrix sigma_k, k in {1, 2, 3}, in the (|-1>, |1>) index order.
HermitianOp pauli(int k);

/// exp(-i H t) with hbar = 1, computed from the Hermitian eigendecomposition.
UnitaryOp unitary_from_hamiltonian(const HermitianOp& hamiltonian, double t);

/// U psi.
QuantumState evolve_state(const QuantumState& psi, const UnitaryOp& u);

/// Haar-random pure state: a normalized vector of independent standard
/// complex Gaussians.
QuantumState random_state(int dimension, RandomStream& rng);

/// Random state orthogonal to psi: a Gaussian vector with its psi component
/// projected out.
QuantumState random_orthogonal_state(const QuantumState& psi, RandomStream& rng);

/// Haar-random unitary: QR of a complex Ginibre matrix with the phases of the
/// diagonal of R moved into Q.
UnitaryOp random_unitary(int dimension, RandomStream& rng);

/// max_ij |a_ij - b_ij|.
double max_abs_difference(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace onticlab
