// Copyright 2026 The qetsim Authors
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
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

namespace qetsim {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;

namespace linalg {

/// Eigenvalues in [-kPsdClampTol, 0) are clamped to zero before square
/// roots; anything below -kPsdClampTol is rejected as non-PSD.
inline constexpr double kPsdClampTol = 1e-10;

/// Eigenvalues below kZeroFloorRel * lambda_max are treated as exact zeros
/// when taking matrix square roots. Without this, rank-deficient inputs pick
/// up sqrt(machine epsilon) ~ 1e-8 noise, which is far above the accuracy the
/// fidelity-based quantities need.
inline constexpr double kZeroFloorRel = 1e-14;

bool is_hermitian(const ComplexMatrix& m, double tol);
bool is_unitary(const ComplexMatrix& m, double tol);
bool is_psd(const ComplexMatrix& m, double tol);
bool is_density(const ComplexMatrix& m, double tol);

/// Largest singular value.
double operator_norm(const ComplexMatrix& m);

/// Kronecker product, entry [(i*n+k), (j*n+l)] = a(i,j) * b(k,l) with
/// n = dim(b).
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Partial trace of an operator on a tensor product of factors.
///
/// `factor_dims` lists the dimension of every factor in order; their product
/// must equal dim(m). `keep` selects the factors retained in the result (in
/// their original order); it must be non-empty. The trace is preserved.
ComplexMatrix partial_trace(const ComplexMatrix& m,
                            const std::vector<Eigen::Index>& factor_dims,
                            const std::vector<std::size_t>& keep);

struct EigResult {
  Eigen::VectorXd values;  // ascending
  ComplexMatrix vectors;   // unitary, columns are eigenvectors
};

/// Hermitian eigendecomposition, h = V diag(values) V^dag.
EigResult herm_eig(const ComplexMatrix& h);

/// exp(-i * v * t / hbar) for Hermitian v; the result is unitary.
ComplexMatrix expm_unitary(const ComplexMatrix& v, double t, double hbar = 1.0);

/// Principal square root of a Hermitian PSD matrix.
ComplexMatrix sqrt_psd(const ComplexMatrix& m);

/// Uhlmann fidelity F(r1, r2) = [Tr sqrt(sqrt(r1) r2 sqrt(r1))]^2.
/// Subnormalized PSD inputs (trace <= 1) are accepted.
double uhlmann_fidelity(const ComplexMatrix& r1, const ComplexMatrix& r2);

/// (1/2) * sum |eigenvalues(r1 - r2)| for Hermitian inputs.
double trace_distance(const ComplexMatrix& r1, const ComplexMatrix& r2);

}  // namespace linalg
}  // namespace qetsim
