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

#include "qetsim/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <unsupported/Eigen/KroneckerProduct>

namespace qetsim::linalg {

namespace {

void require_square(const ComplexMatrix& m, const char* who) {
  if (m.rows() != m.cols() || m.rows() < 1) {
    std::ostringstream os;
    os << who << ": expected a square matrix of dim >= 1, got " << m.rows()
       << "x" << m.cols();
    throw std::invalid_argument(os.str());
  }
}

void require_hermitian(const ComplexMatrix& m, double tol, const char* who) {
  require_square(m, who);
  if (!is_hermitian(m, tol)) {
    std::ostringstream os;
    os << who << ": input is not Hermitian within " << tol;
    throw std::invalid_argument(os.str());
  }
}

Eigen::SelfAdjointEigenSolver<ComplexMatrix> solve_hermitian(
    const ComplexMatrix& h, const char* who) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error(std::string(who) +
                             ": Hermitian eigensolver did not converge");
  }
  return solver;
}

// Clamps the spectrum of a Hermitian PSD-up-to-roundoff matrix: small
// negatives and relative-roundoff positives become exact zeros, a negative
// below -kPsdClampTol is a hard error.
Eigen::VectorXd clamp_psd_spectrum(const Eigen::VectorXd& values,
                                   const char* who) {
  const double min_ev = values.minCoeff();
  if (min_ev < -kPsdClampTol) {
    std::ostringstream os;
    os << who << ": eigenvalue " << min_ev << " below -" << kPsdClampTol
       << "; input is not PSD";
    throw std::invalid_argument(os.str());
  }
  const double floor = kZeroFloorRel * std::max(values.maxCoeff(), 0.0);
  Eigen::VectorXd out = values;
  for (Eigen::Index i = 0; i < out.size(); ++i) {
    if (out(i) < floor) out(i) = 0.0;
  }
  return out;
}

}  // namespace

bool is_hermitian(const ComplexMatrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

bool is_unitary(const ComplexMatrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  ComplexMatrix residual =
      m.adjoint() * m - ComplexMatrix::Identity(m.rows(), m.cols());
  return residual.cwiseAbs().maxCoeff() <= tol;
}

bool is_psd(const ComplexMatrix& m, double tol) {
  if (!is_hermitian(m, tol)) return false;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m,
                                                      Eigen::EigenvaluesOnly);
  return solver.info() == Eigen::Success &&
         solver.eigenvalues().minCoeff() >= -tol;
}

bool is_density(const ComplexMatrix& m, double tol) {
  return is_psd(m, tol) && std::abs(m.trace().real() - 1.0) <= tol &&
         std::abs(m.trace().imag()) <= tol;
}

double operator_norm(const ComplexMatrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  return svd.singularValues()(0);
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  return Eigen::kroneckerProduct(a, b).eval();
}

ComplexMatrix partial_trace(const ComplexMatrix& m,
                            const std::vector<Eigen::Index>& factor_dims,
                            const std::vector<std::size_t>& keep) {
  require_square(m, "partial_trace");
  if (factor_dims.empty()) {
    throw std::invalid_argument("partial_trace: factor_dims is empty");
  }
  Eigen::Index total = 1;
  for (Eigen::Index d : factor_dims) {
    if (d < 1) throw std::invalid_argument("partial_trace: factor dim < 1");
    total *= d;
  }
  if (total != m.rows()) {
    std::ostringstream os;
    os << "partial_trace: product of factor dims (" << total
       << ") does not match matrix dim (" << m.rows() << ")";
    throw std::invalid_argument(os.str());
  }
  if (keep.empty()) {
    throw std::invalid_argument("partial_trace: keep set is empty");
  }

  const std::size_t n = factor_dims.size();
  std::vector<bool> kept(n, false);
  for (std::size_t k : keep) {
    if (k >= n) throw std::invalid_argument("partial_trace: keep index out of range");
    if (kept[k]) throw std::invalid_argument("partial_trace: duplicate keep index");
    kept[k] = true;
  }

  // stride of factor f in the row-major composite index
  std::vector<Eigen::Index> stride(n, 1);
  for (std::size_t f = n; f-- > 1;) {
    stride[f - 1] = stride[f] * factor_dims[f];
  }

  std::vector<std::size_t> keep_sorted;
  std::vector<std::size_t> traced;
  for (std::size_t f = 0; f < n; ++f) {
    (kept[f] ? keep_sorted : traced).push_back(f);
  }

  Eigen::Index dim_keep = 1;
  for (std::size_t f : keep_sorted) dim_keep *= factor_dims[f];
  Eigen::Index dim_traced = 1;
  for (std::size_t f : traced) dim_traced *= factor_dims[f];

  // offset into the full index for a composite sub-index over `factors`
  auto offset = [&](Eigen::Index composite,
                    const std::vector<std::size_t>& factors) {
    Eigen::Index off = 0;
    for (std::size_t i = factors.size(); i-- > 0;) {
      const std::size_t f = factors[i];
      off += (composite % factor_dims[f]) * stride[f];
      composite /= factor_dims[f];
    }
    return off;
  };

  ComplexMatrix out = ComplexMatrix::Zero(dim_keep, dim_keep);
  for (Eigen::Index r = 0; r < dim_keep; ++r) {
    const Eigen::Index row_base = offset(r, keep_sorted);
    for (Eigen::Index c = 0; c < dim_keep; ++c) {
      const Eigen::Index col_base = offset(c, keep_sorted);
      Complex sum = 0.0;
      for (Eigen::Index s = 0; s < dim_traced; ++s) {
        const Eigen::Index off = offset(s, traced);
        sum += m(row_base + off, col_base + off);
      }
      out(r, c) = sum;
    }
  }
  return out;
}

EigResult herm_eig(const ComplexMatrix& h) {
  require_hermitian(h, 1e-10, "herm_eig");
  auto solver = solve_hermitian(h, "herm_eig");
  return EigResult{solver.eigenvalues(), solver.eigenvectors()};
}

ComplexMatrix expm_unitary(const ComplexMatrix& v, double t, double hbar) {
  require_hermitian(v, 1e-10, "expm_unitary");
  if (hbar == 0.0) throw std::invalid_argument("expm_unitary: hbar is zero");
  auto solver = solve_hermitian(v, "expm_unitary");
  Eigen::VectorXcd phases(v.rows());
  for (Eigen::Index i = 0; i < v.rows(); ++i) {
    phases(i) = std::exp(Complex(0.0, -solver.eigenvalues()(i) * t / hbar));
  }
  return solver.eigenvectors() * phases.asDiagonal() *
         solver.eigenvectors().adjoint();
}

ComplexMatrix sqrt_psd(const ComplexMatrix& m) {
  require_hermitian(m, 1e-10, "sqrt_psd");
  auto solver = solve_hermitian(m, "sqrt_psd");
  Eigen::VectorXd values = clamp_psd_spectrum(solver.eigenvalues(), "sqrt_psd");
  Eigen::VectorXd roots = values.cwiseSqrt();
  return solver.eigenvectors() * roots.asDiagonal() *
         solver.eigenvectors().adjoint();
}

double uhlmann_fidelity(const ComplexMatrix& r1, const ComplexMatrix& r2) {
  require_hermitian(r1, 1e-10, "uhlmann_fidelity");
  require_hermitian(r2, 1e-10, "uhlmann_fidelity");
  if (r1.rows() != r2.rows()) {
    throw std::invalid_argument("uhlmann_fidelity: dimension mismatch");
  }
  ComplexMatrix s1 = sqrt_psd(r1);  // also rejects non-PSD r1
  {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> check(r2,
                                                       Eigen::EigenvaluesOnly);
    if (check.eigenvalues().minCoeff() < -kPsdClampTol) {
      throw std::invalid_argument(
          "uhlmann_fidelity: second argument is not PSD");
    }
  }
  ComplexMatrix inner = s1 * r2 * s1;
  inner = ((inner + inner.adjoint()) / 2.0).eval();
  auto solver = solve_hermitian(inner, "uhlmann_fidelity");
  Eigen::VectorXd values =
      clamp_psd_spectrum(solver.eigenvalues(), "uhlmann_fidelity");
  const double root_sum = values.cwiseSqrt().sum();
  return root_sum * root_sum;
}

double trace_distance(const ComplexMatrix& r1, const ComplexMatrix& r2) {
  require_hermitian(r1, 1e-10, "trace_distance");
  require_hermitian(r2, 1e-10, "trace_distance");
  if (r1.rows() != r2.rows()) {
    throw std::invalid_argument("trace_distance: dimension mismatch");
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(r1 - r2,
                                                      Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("trace_distance: eigensolver did not converge");
  }
  return 0.5 * solver.eigenvalues().cwiseAbs().sum();
}

}  // namespace qetsim::linalg
