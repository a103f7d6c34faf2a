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

#include "qetsim/model.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qetsim {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

std::string lowercase(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

bool is_bit_string(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return c == '0' || c == '1';
  });
}

Eigen::Index label_value(std::string_view label) {
  Eigen::Index v = 0;
  for (char c : label) v = 2 * v + (c == '1' ? 1 : 0);
  return v;
}

}  // namespace

PureQubit::PureQubit(Complex a, Complex b) : alpha(a), beta(b) {
  const double norm = std::norm(a) + std::norm(b);
  if (std::abs(norm - 1.0) > 1e-12) {
    std::ostringstream os;
    os << "PureQubit: |alpha|^2 + |beta|^2 = " << norm
       << " is not 1 within 1e-12";
    throw std::invalid_argument(os.str());
  }
}

ComplexMatrix PureQubit::density() const {
  Eigen::Vector2cd v = amplitudes();
  return v * v.adjoint();
}

EnvDensity::EnvDensity(ComplexMatrix matrix) : matrix_(std::move(matrix)) {
  if (matrix_.rows() != matrix_.cols() || matrix_.rows() < 1) {
    throw std::invalid_argument("EnvDensity: matrix must be square");
  }
  if (matrix_.rows() > kMaxEnvDim) {
    std::ostringstream os;
    os << "EnvDensity: dim " << matrix_.rows() << " exceeds the bound "
       << kMaxEnvDim;
    throw std::invalid_argument(os.str());
  }
  if (!linalg::is_hermitian(matrix_, 1e-10)) {
    throw std::invalid_argument("EnvDensity: matrix is not Hermitian within 1e-10");
  }
  if (!linalg::is_psd(matrix_, 1e-10)) {
    throw std::invalid_argument("EnvDensity: matrix is not PSD within 1e-10");
  }
  if (std::abs(matrix_.trace().real() - 1.0) > 1e-10) {
    throw std::invalid_argument("EnvDensity: trace is not 1 within 1e-10");
  }
}

// ---------------------------------------------------------------------------
// Bell basis

Eigen::Vector4cd bell_vector(BellOutcome outcome) {
  Eigen::Vector4cd v = Eigen::Vector4cd::Zero();
  switch (outcome) {
    case BellOutcome::PhiPlus:
      v(0) = kInvSqrt2;
      v(3) = kInvSqrt2;
      break;
    case BellOutcome::PhiMinus:
      v(0) = kInvSqrt2;
      v(3) = -kInvSqrt2;
      break;
    case BellOutcome::PsiPlus:
      v(1) = kInvSqrt2;
      v(2) = kInvSqrt2;
      break;
    case BellOutcome::PsiMinus:
      v(1) = kInvSqrt2;
      v(2) = -kInvSqrt2;
      break;
  }
  return v;
}

ComplexMatrix bell_projector(BellOutcome outcome) {
  Eigen::Vector4cd v = bell_vector(outcome);
  return v * v.adjoint();
}

Eigen::Matrix2cd correction_pauli(BellOutcome outcome) {
  Eigen::Matrix2cd x, z;
  x << 0, 1, 1, 0;
  z << 1, 0, 0, -1;
  switch (outcome) {
    case BellOutcome::PhiPlus:
      return Eigen::Matrix2cd::Identity();
    case BellOutcome::PhiMinus:
      return z;
    case BellOutcome::PsiPlus:
      return x;
    case BellOutcome::PsiMinus:
      return z * x;
  }
  throw std::logic_error("correction_pauli: unreachable");
}

std::string_view to_string(BellOutcome outcome) {
  switch (outcome) {
    case BellOutcome::PhiPlus:
      return "phi+";
    case BellOutcome::PhiMinus:
      return "phi-";
    case BellOutcome::PsiPlus:
      return "psi+";
    case BellOutcome::PsiMinus:
      return "psi-";
  }
  throw std::logic_error("to_string(BellOutcome): unreachable");
}

BellOutcome parse_bell_outcome(std::string_view name) {
  const std::string s = lowercase(name);
  if (s == "phi+" || s == "phi_plus" || s == "phiplus") return BellOutcome::PhiPlus;
  if (s == "phi-" || s == "phi_minus" || s == "phiminus") return BellOutcome::PhiMinus;
  if (s == "psi+" || s == "psi_plus" || s == "psiplus") return BellOutcome::PsiPlus;
  if (s == "psi-" || s == "psi_minus" || s == "psiminus") return BellOutcome::PsiMinus;
  throw std::invalid_argument("unknown Bell outcome: '" + std::string(name) +
                              "' (expected phi+, phi-, psi+ or psi-)");
}

// ---------------------------------------------------------------------------
// DephasingInteraction

DephasingInteraction::DephasingInteraction(
    Form form, std::map<std::string, ComplexMatrix> ops)
    : form_(form), ops_(std::move(ops)) {
  if (ops_.empty()) {
    throw std::invalid_argument("DephasingInteraction: no conditional operators");
  }
  env_dim_ = ops_.begin()->second.rows();
  for (const auto& [label, op] : ops_) {
    if (!is_bit_string(label)) {
      throw std::invalid_argument(
          "DephasingInteraction: label '" + label + "' is not a bit string");
    }
    if (op.rows() != op.cols() || op.rows() != env_dim_) {
      throw std::invalid_argument(
          "DephasingInteraction: operator for label '" + label +
          "' has inconsistent dimensions");
    }
    if (form_ == Form::Generator) {
      if (!linalg::is_hermitian(op, 1e-10)) {
        throw std::invalid_argument(
            "DephasingInteraction: generator for label '" + label +
            "' is not Hermitian within 1e-10");
      }
    } else {
      if (!linalg::is_unitary(op, 1e-10)) {
        throw std::invalid_argument(
            "DephasingInteraction: operator for label '" + label +
            "' is not unitary within 1e-10");
      }
    }
  }
}

DephasingInteraction DephasingInteraction::identity(Eigen::Index env_dim) {
  std::map<std::string, ComplexMatrix> ops;
  for (const char* label : {"00", "01", "10", "11"}) {
    ops[label] = ComplexMatrix::Identity(env_dim, env_dim);
  }
  return DephasingInteraction(Form::Unitary, std::move(ops));
}

bool DephasingInteraction::covers(std::string_view label) const {
  return ops_.count(std::string(label)) > 0;
}

ComplexMatrix DephasingInteraction::unitary_at(std::string_view label,
                                               double duration) const {
  auto it = ops_.find(std::string(label));
  if (it == ops_.end()) {
    throw std::invalid_argument(
        "DephasingInteraction: no conditional operator for label '" +
        std::string(label) + "'");
  }
  if (form_ == Form::Generator) {
    return linalg::expm_unitary(it->second, duration);
  }
  if (duration == 0.0) {
    return ComplexMatrix::Identity(env_dim_, env_dim_);
  }
  return it->second;
}

// ---------------------------------------------------------------------------
// BlockState

BlockState::BlockState(std::vector<std::string> register_names,
                       std::vector<std::string> labels, Eigen::Index env_dim,
                       std::vector<ComplexMatrix> blocks)
    : register_names_(std::move(register_names)),
      labels_(std::move(labels)),
      env_dim_(env_dim),
      blocks_(std::move(blocks)) {
  if (register_names_.empty()) {
    throw std::invalid_argument("BlockState: empty register");
  }
  if (std::set<std::string>(register_names_.begin(), register_names_.end())
          .size() != register_names_.size()) {
    throw std::invalid_argument("BlockState: duplicate qubit names");
  }
  if (env_dim_ < 1 || env_dim_ > kMaxEnvDim) {
    throw std::invalid_argument("BlockState: environment dim out of range");
  }
  if (labels_.empty()) {
    throw std::invalid_argument("BlockState: no retained labels");
  }
  for (const auto& label : labels_) {
    if (!is_bit_string(label) || label.size() != register_names_.size()) {
      throw std::invalid_argument("BlockState: bad label '" + label + "'");
    }
  }
  if (!std::is_sorted(labels_.begin(), labels_.end()) ||
      std::adjacent_find(labels_.begin(), labels_.end()) != labels_.end()) {
    throw std::invalid_argument("BlockState: labels must be sorted and unique");
  }
  if (blocks_.size() != labels_.size() * labels_.size()) {
    throw std::invalid_argument("BlockState: wrong number of blocks");
  }
  for (const auto& b : blocks_) {
    if (b.rows() != env_dim_ || b.cols() != env_dim_) {
      throw std::invalid_argument("BlockState: block dimension mismatch");
    }
  }
}

BlockState BlockState::from_full(const ComplexMatrix& m,
                                 std::vector<std::string> register_names,
                                 Eigen::Index env_dim,
                                 double label_cutoff_tol) {
  const std::size_t n = register_names.size();
  const Eigen::Index n_labels = Eigen::Index(1) << n;
  if (m.rows() != m.cols() || m.rows() != n_labels * env_dim) {
    throw std::invalid_argument("from_full: matrix dim does not match register");
  }
  if (!linalg::is_hermitian(m, 1e-9)) {
    throw std::invalid_argument("from_full: matrix is not Hermitian within 1e-9");
  }

  auto label_of = [&](Eigen::Index v) {
    std::string s(n, '0');
    for (std::size_t i = n; i-- > 0;) {
      s[i] = (v & 1) ? '1' : '0';
      v >>= 1;
    }
    return s;
  };
  auto block_at = [&](Eigen::Index i, Eigen::Index j) {
    return m.block(i * env_dim, j * env_dim, env_dim, env_dim);
  };

  std::vector<Eigen::Index> retained;
  for (Eigen::Index i = 0; i < n_labels; ++i) {
    if (block_at(i, i).cwiseAbs().maxCoeff() > label_cutoff_tol) {
      retained.push_back(i);
    }
  }
  if (retained.empty()) {
    throw std::invalid_argument("from_full: matrix has no retained labels");
  }
  std::set<Eigen::Index> retained_set(retained.begin(), retained.end());
  std::vector<std::string> offenders;
  for (Eigen::Index i = 0; i < n_labels; ++i) {
    for (Eigen::Index j = 0; j < n_labels; ++j) {
      if (retained_set.count(i) && retained_set.count(j)) continue;
      if (block_at(i, j).cwiseAbs().maxCoeff() > label_cutoff_tol) {
        offenders.push_back(label_of(i) + "<->" + label_of(j));
      }
    }
  }
  if (!offenders.empty()) {
    std::ostringstream os;
    os << "from_full: non-negligible mass outside retained labels:";
    for (const auto& o : offenders) os << " " << o;
    throw std::invalid_argument(os.str());
  }

  std::vector<std::string> labels;
  for (Eigen::Index i : retained) labels.push_back(label_of(i));
  std::vector<ComplexMatrix> blocks;
  blocks.reserve(retained.size() * retained.size());
  for (Eigen::Index i : retained) {
    for (Eigen::Index j : retained) {
      blocks.push_back(block_at(i, j));
    }
  }
  return BlockState(std::move(register_names), std::move(labels), env_dim,
                    std::move(blocks));
}

ComplexMatrix BlockState::to_full() const {
  const Eigen::Index n_labels = Eigen::Index(1) << n_qubits();
  ComplexMatrix out = ComplexMatrix::Zero(n_labels * env_dim_, n_labels * env_dim_);
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    const Eigen::Index r = label_value(labels_[i]) * env_dim_;
    for (std::size_t j = 0; j < labels_.size(); ++j) {
      const Eigen::Index c = label_value(labels_[j]) * env_dim_;
      out.block(r, c, env_dim_, env_dim_) = block(i, j);
    }
  }
  return out;
}

bool BlockState::has_label(std::string_view label) const {
  return std::binary_search(labels_.begin(), labels_.end(), label);
}

std::size_t BlockState::label_index(std::string_view label) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  if (it == labels_.end() || *it != label) {
    throw std::invalid_argument("BlockState: label '" + std::string(label) +
                                "' is not retained");
  }
  return std::size_t(it - labels_.begin());
}

std::size_t BlockState::qubit_position(std::string_view name) const {
  for (std::size_t i = 0; i < register_names_.size(); ++i) {
    if (register_names_[i] == name) return i;
  }
  throw std::invalid_argument("BlockState: no qubit named '" +
                              std::string(name) + "' in register");
}

const ComplexMatrix& BlockState::block(std::size_t i, std::size_t j) const {
  return blocks_.at(i * labels_.size() + j);
}

const ComplexMatrix& BlockState::block(std::string_view row_label,
                                       std::string_view col_label) const {
  return block(label_index(row_label), label_index(col_label));
}

double BlockState::trace() const {
  double tr = 0.0;
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    tr += block(i, i).trace().real();
  }
  return tr;
}

double BlockState::purity() const {
  // Tr(rho^2) = sum_ij Tr(B_ij B_ji)
  Complex p = 0.0;
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    for (std::size_t j = 0; j < labels_.size(); ++j) {
      p += (block(i, j) * block(j, i)).trace();
    }
  }
  return p.real();
}

bool BlockState::is_normalized(double tol) const {
  return std::abs(trace() - 1.0) <= tol;
}

BlockState BlockState::scaled(double factor) const {
  std::vector<ComplexMatrix> blocks;
  blocks.reserve(blocks_.size());
  for (const auto& b : blocks_) blocks.push_back(factor * b);
  return BlockState(register_names_, labels_, env_dim_, std::move(blocks));
}

BlockState BlockState::trace_out(std::string_view qubit) const {
  if (n_qubits() < 2) {
    throw std::invalid_argument("trace_out: register has only one qubit");
  }
  const std::size_t pos = qubit_position(qubit);

  std::vector<std::string> new_names = register_names_;
  new_names.erase(new_names.begin() + pos);

  auto reduced = [&](const std::string& label) {
    std::string s = label;
    s.erase(s.begin() + pos);
    return s;
  };

  std::vector<std::string> new_labels;
  for (const auto& label : labels_) new_labels.push_back(reduced(label));
  std::sort(new_labels.begin(), new_labels.end());
  new_labels.erase(std::unique(new_labels.begin(), new_labels.end()),
                   new_labels.end());

  auto index_of = [&](const std::string& label) {
    return std::size_t(std::lower_bound(new_labels.begin(), new_labels.end(),
                                        label) -
                       new_labels.begin());
  };

  std::vector<ComplexMatrix> new_blocks(
      new_labels.size() * new_labels.size(),
      ComplexMatrix::Zero(env_dim_, env_dim_));
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    for (std::size_t j = 0; j < labels_.size(); ++j) {
      if (labels_[i][pos] != labels_[j][pos]) continue;  // off-diagonal in the traced qubit
      const std::size_t r = index_of(reduced(labels_[i]));
      const std::size_t c = index_of(reduced(labels_[j]));
      new_blocks[r * new_labels.size() + c] += block(i, j);
    }
  }
  return BlockState(std::move(new_names), std::move(new_labels), env_dim_,
                    std::move(new_blocks));
}

ComplexMatrix BlockState::system_density() const {
  const Eigen::Index n_labels = Eigen::Index(1) << n_qubits();
  ComplexMatrix out = ComplexMatrix::Zero(n_labels, n_labels);
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    for (std::size_t j = 0; j < labels_.size(); ++j) {
      out(label_value(labels_[i]), label_value(labels_[j])) =
          block(i, j).trace();
    }
  }
  return out;
}

ComplexMatrix BlockState::pair_density(std::string_view q1,
                                       std::string_view q2) const {
  const std::size_t p1 = qubit_position(q1);
  const std::size_t p2 = qubit_position(q2);
  if (p1 == p2) throw std::invalid_argument("pair_density: identical qubits");
  ComplexMatrix out = ComplexMatrix::Zero(4, 4);
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    for (std::size_t j = 0; j < labels_.size(); ++j) {
      // spectator bits must agree for the term to survive the partial trace
      bool agree = true;
      for (std::size_t k = 0; k < labels_[i].size(); ++k) {
        if (k != p1 && k != p2 && labels_[i][k] != labels_[j][k]) {
          agree = false;
          break;
        }
      }
      if (!agree) continue;
      const Eigen::Index r = 2 * (labels_[i][p1] - '0') + (labels_[i][p2] - '0');
      const Eigen::Index c = 2 * (labels_[j][p1] - '0') + (labels_[j][p2] - '0');
      out(r, c) += block(i, j).trace();
    }
  }
  return out;
}

void BlockState::validate(double tol, bool expect_normalized) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (!linalg::is_hermitian(block(i, i), 1e-10)) {
      throw std::runtime_error("BlockState: diagonal block " + labels_[i] +
                               " is not Hermitian within 1e-10");
    }
    if (!linalg::is_psd(block(i, i), 1e-10)) {
      throw std::runtime_error("BlockState: diagonal block " + labels_[i] +
                               " is not PSD within 1e-10");
    }
    for (std::size_t j = i + 1; j < labels_.size(); ++j) {
      if ((block(j, i) - block(i, j).adjoint()).cwiseAbs().maxCoeff() > 1e-10) {
        throw std::runtime_error("BlockState: blocks " + labels_[i] + "," +
                                 labels_[j] +
                                 " violate Hermiticity pairing within 1e-10");
      }
    }
  }
  if (expect_normalized && std::abs(trace() - 1.0) > tol) {
    std::ostringstream os;
    os << "BlockState: trace " << trace() << " is not 1 within " << tol;
    throw std::runtime_error(os.str());
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(to_full(),
                                                      Eigen::EigenvaluesOnly);
  if (solver.eigenvalues().minCoeff() < -tol) {
    std::ostringstream os;
    os << "BlockState: assembled state has eigenvalue "
       << solver.eigenvalues().minCoeff() << " below -" << tol;
    throw std::runtime_error(os.str());
  }
}

BlockState initial_state(const PureQubit& psi, const EnvDensity& env) {
  // amplitude of |abc> in |psi>_A (x) |Phi+>_BC
  const std::map<std::string, Complex> amps = {
      {"000", psi.alpha * kInvSqrt2},
      {"011", psi.alpha * kInvSqrt2},
      {"100", psi.beta * kInvSqrt2},
      {"111", psi.beta * kInvSqrt2},
  };
  std::vector<std::string> labels = {"000", "011", "100", "111"};
  std::vector<ComplexMatrix> blocks;
  blocks.reserve(16);
  for (const auto& li : labels) {
    for (const auto& lj : labels) {
      blocks.push_back(amps.at(li) * std::conj(amps.at(lj)) * env.matrix());
    }
  }
  return BlockState({"A", "B", "C"}, std::move(labels), env.dim(),
                    std::move(blocks));
}

}  // namespace qetsim
