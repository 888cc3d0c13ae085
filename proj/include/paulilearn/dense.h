// Copyright 2026 The paulilearn Authors
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

#ifndef PAULILEARN_DENSE_H
#define PAULILEARN_DENSE_H

#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "paulilearn/channel.h"
#include "paulilearn/pauli.h"
#include "paulilearn/rng.h"

namespace paulilearn {

using Matrix = Eigen::MatrixXcd;

/// Dense simulation is limited to 64x64 matrices.
inline constexpr size_t kMaxDenseQubits = 6;

/// sigma_0 = I, sigma_1 = X, sigma_2 = Y, sigma_3 = Z.
Matrix pauli_matrix(uint8_t symbol);
/// Tensor product over coordinates; coordinate 0 is the leftmost (most significant) factor.
Matrix pauli_matrix(const PauliString &a);

class KrausChannel {
   public:
    static constexpr double kCompletenessTolerance = 1e-10;

    /// Throws std::invalid_argument on bad sizes or when sum_j K_j^dag K_j != I.
    KrausChannel(size_t num_qubits, std::vector<Matrix> ops);

    static KrausChannel identity(size_t num_qubits);
    /// Mixed-unitary form with K_C = sqrt(p(C)) sigma_C.
    static KrausChannel from_pauli_channel(const ChannelSpec &spec);

    size_t num_qubits() const { return num_qubits_; }
    size_t dimension() const { return size_t{1} << num_qubits_; }
    const std::vector<Matrix> &ops() const { return ops_; }

   private:
    size_t num_qubits_;
    std::vector<Matrix> ops_;
};

class DensityMatrix {
   public:
    static constexpr double kHermitianTolerance = 1e-10;
    static constexpr double kTraceTolerance = 1e-10;
    static constexpr double kEigenvalueFloor = -1e-8;

    /// Validates hermiticity, unit trace and positivity.
    explicit DensityMatrix(Matrix rho);

    size_t num_qubits() const { return num_qubits_; }
    const Matrix &matrix() const { return rho_; }
    double trace() const { return rho_.trace().real(); }
    double purity() const { return (rho_ * rho_).trace().real(); }

   private:
    Matrix rho_;
    size_t num_qubits_;
};

/// p(C) = sum_j |alpha_{j,C}|^2 with alpha_{j,C} = 2^-n tr(sigma_C^dag K_j). Atoms below 1e-15
/// are dropped.
ChannelSpec pauli_error_rates(const KrausChannel &channel);

DensityMatrix apply_channel(const KrausChannel &channel, const DensityMatrix &rho);

/// Product of sigma_{A_j} eigenstates; sign bit 0 picks the +1 eigenstate, 1 the -1 eigenstate.
DensityMatrix prepare_probe_state(const PauliString &a, const BitString &signs);

/// One twirled probe: uniform T, inputs flipped by A*T, density-matrix evolution, sequential
/// projective measurement of each qubit in its sigma_{A_j} basis, outcomes shifted by A*T.
ProbeRecord twirl_probe(const KrausChannel &channel, const PauliString &a, Rng &rng);

/// Exact readout law of a nontrivial probe a on a Pauli channel, indexed by the readout's
/// integer value (bit j = coordinate j). Small n only.
std::vector<double> readout_distribution(const ChannelSpec &spec, const PauliString &a);

/// Probe access backed by twirl_probe.
class TwirledKrausAccess : public ChannelAccess {
   public:
    explicit TwirledKrausAccess(KrausChannel channel) : channel_(std::move(channel)) {}

    size_t num_qubits() const override { return channel_.num_qubits(); }
    ProbeRecord probe(const PauliString &a, Rng &rng) const override { return twirl_probe(channel_, a, rng); }

    const KrausChannel &channel() const { return channel_; }

   private:
    KrausChannel channel_;
};

}  // namespace paulilearn

#endif
