// Copyright 2026 The distill Authors
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

#include "distill/dense_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace distill::oracle {
namespace {

using Complex = std::complex<double>;

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

Matrix single_qubit_pauli(bool phase, bool parity) {
  Matrix s(2, 2);
  const Complex i(0.0, 1.0);
  if (!phase && !parity) {
    s << 1, 0, 0, 1;
  } else if (!phase && parity) {
    s << 0, 1, 1, 0;
  } else if (phase && !parity) {
    s << 1, 0, 0, -1;
  } else {
    s << 0, -i, i, 0;
  }
  return s;
}

void require_small(std::size_t n, const char* what) {
  if (n > kMaxOraclePairs) {
    throw std::invalid_argument(std::string(what) + ": " + std::to_string(n) +
                                " pairs exceeds the dense oracle limit of " +
                                std::to_string(kMaxOraclePairs));
  }
}

// Projector onto the joint eigenspace with eigenvalues (−1)^{outcome_i}.
Matrix joint_projector(const std::vector<Matrix>& observables, std::uint64_t outcome) {
  const auto dim = observables.empty() ? Eigen::Index{1} : observables.front().rows();
  Matrix proj = Matrix::Identity(dim, dim);
  const std::size_t k = observables.size();
  for (std::size_t i = 0; i < k; ++i) {
    const double sign = ((outcome >> (k - 1 - i)) & 1U) ? -1.0 : 1.0;
    proj = proj * (0.5 * (Matrix::Identity(dim, dim) + sign * observables[i]));
  }
  return proj;
}

}  // namespace

Matrix pauli_matrix(const BitVector& a) {
  if (a.size() % 2 != 0) throw std::invalid_argument("pauli_matrix: odd label length");
  const std::size_t k = a.size() / 2;
  Matrix out = Matrix::Identity(1, 1);
  for (std::size_t i = 0; i < k; ++i) out = kron(out, single_qubit_pauli(a[i], a[k + i]));
  return out;
}

Vector bell_vector(const BitVector& x) {
  if (x.size() % 2 != 0) throw std::invalid_argument("bell_vector: odd label length");
  const std::size_t n = x.size() / 2;
  require_small(n, "bell_vector");
  const Matrix sigma = pauli_matrix(x);
  const Eigen::Index half = Eigen::Index{1} << n;
  const double amplitude = std::pow(2.0, -0.5 * static_cast<double>(n));
  // (σ ⊗ I) Σ_i |i⟩|i⟩ has amplitude σ(r, i) on |r⟩|i⟩.
  Vector out = Vector::Zero(half * half);
  for (Eigen::Index r = 0; r < half; ++r) {
    for (Eigen::Index i = 0; i < half; ++i) out((r << n) | i) = amplitude * sigma(r, i);
  }
  return out;
}

Matrix density_matrix(const BellDiagonalState& state) {
  const std::size_t n = state.pairs();
  require_small(n, "density_matrix");
  const auto dim = Eigen::Index{1} << (2 * n);
  Matrix rho = Matrix::Zero(dim, dim);
  const auto probs = state.probs();
  for (std::size_t x = 0; x < probs.size(); ++x) {
    if (probs[x] == 0.0) continue;
    const Vector v = bell_vector(BitVector::from_word(2 * n, x));
    rho.noalias() += probs[x] * (v * v.adjoint());
  }
  return rho;
}

std::vector<ParityBranch> simulate_parity_measurement(const BellDiagonalState& state, std::size_t kept) {
  const std::size_t n = state.pairs();
  require_small(n, "simulate_parity_measurement");
  if (kept > n) throw std::invalid_argument("simulate_parity_measurement: kept exceeds n");
  const std::size_t measured = n - kept;
  const Matrix rho = density_matrix(state);

  std::vector<std::size_t> kept_qubits;
  std::vector<std::size_t> measured_qubits;
  for (std::size_t q = 0; q < kept; ++q) kept_qubits.push_back(q);
  for (std::size_t q = 0; q < kept; ++q) kept_qubits.push_back(n + q);
  for (std::size_t q = kept; q < n; ++q) measured_qubits.push_back(q);
  for (std::size_t q = kept; q < n; ++q) measured_qubits.push_back(n + q);

  const std::size_t total_qubits = 2 * n;
  auto scatter = [&](std::uint64_t bits, const std::vector<std::size_t>& qubits) {
    std::uint64_t index = 0;
    for (std::size_t i = 0; i < qubits.size(); ++i) {
      if ((bits >> (qubits.size() - 1 - i)) & 1U) index |= std::uint64_t{1} << (total_qubits - 1 - qubits[i]);
    }
    return index;
  };

  const auto kept_dim = Eigen::Index{1} << (2 * kept);
  const std::uint64_t branches = std::uint64_t{1} << measured;
  std::vector<Matrix> kept_states(branches, Matrix::Zero(kept_dim, kept_dim));
  std::vector<std::uint64_t> kept_index(kept_dim);
  for (Eigen::Index k = 0; k < kept_dim; ++k) kept_index[k] = scatter(k, kept_qubits);

  // Project onto each computational outcome of the measured qubits and trace
  // them out; outcomes with the same parity pattern t are merged.
  for (std::uint64_t outcome = 0; outcome < (std::uint64_t{1} << (2 * measured)); ++outcome) {
    const std::uint64_t alice = outcome >> measured;
    const std::uint64_t bob = outcome & low_mask(measured);
    const std::uint64_t t = alice ^ bob;
    const std::uint64_t offset = scatter(outcome, measured_qubits);
    Matrix& block = kept_states[t];
    for (Eigen::Index r = 0; r < kept_dim; ++r) {
      for (Eigen::Index c = 0; c < kept_dim; ++c) {
        block(r, c) += rho(static_cast<Eigen::Index>(kept_index[r] | offset),
                           static_cast<Eigen::Index>(kept_index[c] | offset));
      }
    }
  }

  std::vector<Vector> kept_bell;
  for (Eigen::Index y = 0; y < kept_dim; ++y) {
    kept_bell.push_back(bell_vector(BitVector::from_word(2 * kept, static_cast<std::uint64_t>(y))));
  }

  std::vector<ParityBranch> out;
  for (std::uint64_t t = 0; t < branches; ++t) {
    const double probability = kept_states[t].trace().real();
    if (!(probability > kNegligibleProbability)) continue;
    const Matrix normalized = kept_states[t] / probability;
    ParityBranch branch;
    branch.t = BitVector::from_word(measured, t);
    branch.probability = probability;
    branch.distribution.resize(kept_dim);
    for (Eigen::Index y = 0; y < kept_dim; ++y) {
      const Vector projected = normalized * kept_bell[y];
      for (Eigen::Index z = 0; z < kept_dim; ++z) {
        const Complex entry = kept_bell[z].dot(projected);
        if (z == y) {
          branch.distribution[y] = entry.real();
        } else {
          branch.max_off_diagonal = std::max(branch.max_off_diagonal, std::abs(entry));
        }
      }
    }
    out.push_back(std::move(branch));
  }
  return out;
}

double SyndromeJoint::probability(const BitVector& a, const BitVector& b) const {
  if (a.size() != generators || b.size() != generators) {
    throw std::invalid_argument("SyndromeJoint: outcome length mismatch");
  }
  return joint.at((a.word() << generators) | b.word());
}

std::vector<double> SyndromeJoint::difference_distribution() const {
  std::vector<double> out(std::size_t{1} << generators, 0.0);
  for (std::size_t index = 0; index < joint.size(); ++index) {
    const std::uint64_t a = index >> generators;
    const std::uint64_t b = index & low_mask(generators);
    out[a ^ b] += joint[index];
  }
  return out;
}

std::vector<double> SyndromeJoint::alice_marginal() const {
  std::vector<double> out(std::size_t{1} << generators, 0.0);
  for (std::size_t index = 0; index < joint.size(); ++index) out[index >> generators] += joint[index];
  return out;
}

Matrix bilateral_observable(const BitVector& g) {
  const Matrix sigma = pauli_matrix(g);
  return kron(sigma.conjugate(), sigma);
}

SyndromeJoint simulate_syndrome_measurement(const BellDiagonalState& state,
                                            std::span<const BitVector> gens) {
  const std::size_t n = state.pairs();
  require_small(n, "simulate_syndrome_measurement");
  for (const auto& g : gens) {
    if (g.size() != 2 * n) throw std::invalid_argument("simulate_syndrome_measurement: generator length mismatch");
  }
  const Matrix rho = density_matrix(state);
  std::vector<Matrix> alice_obs;
  std::vector<Matrix> bob_obs;
  for (const auto& g : gens) {
    const Matrix sigma = pauli_matrix(g);
    alice_obs.push_back(sigma.conjugate());
    bob_obs.push_back(sigma);
  }

  const std::size_t k = gens.size();
  const std::uint64_t outcomes = std::uint64_t{1} << k;
  std::vector<Matrix> alice_proj;
  std::vector<Matrix> bob_proj;
  for (std::uint64_t o = 0; o < outcomes; ++o) {
    alice_proj.push_back(joint_projector(alice_obs, o));
    bob_proj.push_back(joint_projector(bob_obs, o));
  }

  // tr((Π_a ⊗ Π_b) ρ) without materializing the Kronecker product.
  const auto half = Eigen::Index{1} << n;
  SyndromeJoint out;
  out.generators = k;
  out.joint.assign(outcomes * outcomes, 0.0);
  for (std::uint64_t a = 0; a < outcomes; ++a) {
    for (std::uint64_t b = 0; b < outcomes; ++b) {
      const Matrix& pa = alice_proj[a];
      const Matrix& pb = bob_proj[b];
      Complex acc = 0.0;
      for (Eigen::Index ra = 0; ra < half; ++ra) {
        for (Eigen::Index ca = 0; ca < half; ++ca) {
          const Complex wa = pa(ra, ca);
          if (wa == Complex(0.0)) continue;
          for (Eigen::Index rb = 0; rb < half; ++rb) {
            for (Eigen::Index cb = 0; cb < half; ++cb) {
              acc += wa * pb(rb, cb) * rho((ca << n) | cb, (ra << n) | rb);
            }
          }
        }
      }
      out.joint[(a << k) | b] = acc.real();
    }
  }
  return out;
}

}  // namespace distill::oracle
