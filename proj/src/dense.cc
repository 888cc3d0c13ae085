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

#include "paulilearn/dense.h"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace paulilearn {

namespace {

using Complex = std::complex<double>;

void check_dense_size(size_t n, const char *what) {
    if (n == 0 || n > kMaxDenseQubits) {
        throw std::invalid_argument(std::string(what) + ": dense simulation supports 1 to " +
                                    std::to_string(kMaxDenseQubits) + " qubits");
    }
}

Matrix kron(const Matrix &a, const Matrix &b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

// m acting on qubit j of n, identity elsewhere.
Matrix embed(const Matrix &m, size_t j, size_t n) {
    Matrix left = Matrix::Identity(Eigen::Index{1} << j, Eigen::Index{1} << j);
    Matrix right = Matrix::Identity(Eigen::Index{1} << (n - j - 1), Eigen::Index{1} << (n - j - 1));
    return kron(kron(left, m), right);
}

Matrix eigen_projector(uint8_t symbol, bool minus) {
    Matrix id = Matrix::Identity(2, 2);
    Matrix s = pauli_matrix(symbol);
    return 0.5 * (minus ? Matrix(id - s) : Matrix(id + s));
}

size_t qubits_for_dimension(Eigen::Index dim) {
    size_t n = 0;
    while ((Eigen::Index{1} << n) < dim) {
        ++n;
    }
    if ((Eigen::Index{1} << n) != dim) {
        throw std::invalid_argument("matrix dimension is not a power of two");
    }
    return n;
}

}  // namespace

Matrix pauli_matrix(uint8_t symbol) {
    const Complex i(0.0, 1.0);
    Matrix m(2, 2);
    switch (symbol) {
        case 0: m << 1, 0, 0, 1; break;
        case 1: m << 0, 1, 1, 0; break;
        case 2: m << 0, -i, i, 0; break;
        case 3: m << 1, 0, 0, -1; break;
        default: throw std::invalid_argument("pauli_matrix: symbol must be 0..3");
    }
    return m;
}

Matrix pauli_matrix(const PauliString &a) {
    check_dense_size(a.size(), "pauli_matrix");
    Matrix out = pauli_matrix(a[0]);
    for (size_t j = 1; j < a.size(); ++j) {
        out = kron(out, pauli_matrix(a[j]));
    }
    return out;
}

KrausChannel::KrausChannel(size_t num_qubits, std::vector<Matrix> ops) : num_qubits_(num_qubits), ops_(std::move(ops)) {
    check_dense_size(num_qubits_, "KrausChannel");
    if (ops_.empty()) {
        throw std::invalid_argument("KrausChannel: need at least one operator");
    }
    const auto dim = static_cast<Eigen::Index>(dimension());
    Matrix sum = Matrix::Zero(dim, dim);
    for (const auto &k : ops_) {
        if (k.rows() != dim || k.cols() != dim) {
            throw std::invalid_argument("KrausChannel: operator is not " + std::to_string(dim) + "x" +
                                        std::to_string(dim));
        }
        sum += k.adjoint() * k;
    }
    double deviation = (sum - Matrix::Identity(dim, dim)).cwiseAbs().maxCoeff();
    if (deviation > kCompletenessTolerance) {
        throw std::invalid_argument("KrausChannel: completeness violated by " + std::to_string(deviation));
    }
}

KrausChannel KrausChannel::identity(size_t num_qubits) {
    check_dense_size(num_qubits, "KrausChannel::identity");
    auto dim = Eigen::Index{1} << num_qubits;
    return KrausChannel(num_qubits, {Matrix::Identity(dim, dim)});
}

KrausChannel KrausChannel::from_pauli_channel(const ChannelSpec &spec) {
    std::vector<Matrix> ops;
    for (const auto &[c, p] : spec.atoms()) {
        if (p > 0.0) {
            ops.push_back(std::sqrt(p) * pauli_matrix(c));
        }
    }
    return KrausChannel(spec.num_qubits(), std::move(ops));
}

DensityMatrix::DensityMatrix(Matrix rho) : rho_(std::move(rho)) {
    if (rho_.rows() != rho_.cols()) {
        throw std::invalid_argument("DensityMatrix: matrix is not square");
    }
    num_qubits_ = qubits_for_dimension(rho_.rows());
    check_dense_size(num_qubits_, "DensityMatrix");
    if ((rho_ - rho_.adjoint()).cwiseAbs().maxCoeff() > kHermitianTolerance) {
        throw std::invalid_argument("DensityMatrix: not hermitian");
    }
    if (std::abs(rho_.trace() - Complex(1.0, 0.0)) > kTraceTolerance) {
        throw std::invalid_argument("DensityMatrix: trace is not 1");
    }
    Eigen::SelfAdjointEigenSolver<Matrix> solver(rho_, Eigen::EigenvaluesOnly);
    if (solver.eigenvalues().minCoeff() < kEigenvalueFloor) {
        throw std::invalid_argument("DensityMatrix: not positive semidefinite");
    }
}

ChannelSpec pauli_error_rates(const KrausChannel &channel) {
    const size_t n = channel.num_qubits();
    const size_t count = size_t{1} << (2 * n);
    const double norm = 1.0 / static_cast<double>(channel.dimension());
    std::vector<std::pair<PauliString, double>> atoms;
    double total = 0.0;
    for (size_t index = 0; index < count; ++index) {
        PauliString c(n);
        for (size_t j = 0; j < n; ++j) {
            c.set(j, static_cast<uint8_t>((index >> (2 * (n - 1 - j))) & 3));
        }
        Matrix sigma = pauli_matrix(c);
        double p = 0.0;
        for (const auto &k : channel.ops()) {
            // tr(sigma^dag K) = sum of conj(sigma) .* K
            Complex alpha = norm * (sigma.conjugate().cwiseProduct(k)).sum();
            p += std::norm(alpha);
        }
        total += p;
        if (p > 1e-15) {
            atoms.emplace_back(std::move(c), p);
        }
    }
    if (std::abs(total - 1.0) > 1e-9) {
        throw std::invalid_argument("pauli_error_rates: rates sum to " + std::to_string(total));
    }
    return ChannelSpec(n, std::move(atoms), ChannelSpec::Normalization::renormalize);
}

DensityMatrix apply_channel(const KrausChannel &channel, const DensityMatrix &rho) {
    if (rho.num_qubits() != channel.num_qubits()) {
        throw std::invalid_argument("apply_channel: dimension mismatch");
    }
    const Matrix &r = rho.matrix();
    Matrix out = Matrix::Zero(r.rows(), r.cols());
    for (const auto &k : channel.ops()) {
        out += k * r * k.adjoint();
    }
    // Restore exact hermiticity lost to rounding.
    return DensityMatrix(0.5 * (out + out.adjoint()));
}

DensityMatrix prepare_probe_state(const PauliString &a, const BitString &signs) {
    if (a.size() != signs.size()) {
        throw std::invalid_argument("prepare_probe_state: length mismatch");
    }
    check_dense_size(a.size(), "prepare_probe_state");
    Matrix rho = Matrix::Identity(1, 1);
    for (size_t j = 0; j < a.size(); ++j) {
        if (a[j] == 0) {
            throw std::invalid_argument("prepare_probe_state: symbol 0 selects no eigenbasis");
        }
        rho = kron(rho, eigen_projector(a[j], signs[j]));
    }
    return DensityMatrix(std::move(rho));
}

ProbeRecord twirl_probe(const KrausChannel &channel, const PauliString &a, Rng &rng) {
    const size_t n = channel.num_qubits();
    if (a.size() != n) {
        throw std::invalid_argument("twirl_probe: probe length does not match channel");
    }
    if (!a.is_nontrivial_probe()) {
        throw std::invalid_argument("twirl_probe: probe must be over {1,2,3}");
    }
    PauliString t(n);
    for (size_t j = 0; j < n; ++j) {
        t.set(j, rng.uniform_quad());
    }
    const BitString signs = star(a, t);
    Matrix rho = apply_channel(channel, prepare_probe_state(a, signs)).matrix();

    BitString readout(n);
    for (size_t j = 0; j < n; ++j) {
        Matrix plus = embed(eigen_projector(a[j], false), j, n);
        double p_plus = std::clamp((plus * rho).trace().real(), 0.0, 1.0);
        bool minus = !(rng.uniform_real() < p_plus);
        Matrix proj = minus ? embed(eigen_projector(a[j], true), j, n) : plus;
        double p = minus ? 1.0 - p_plus : p_plus;
        rho = proj * rho * proj / p;
        readout.set(j, minus != signs[j]);
    }
    return ProbeRecord{a, readout, BitString(n)};
}

std::vector<double> readout_distribution(const ChannelSpec &spec, const PauliString &a) {
    const size_t n = spec.num_qubits();
    if (a.size() != n || n > 20) {
        throw std::invalid_argument("readout_distribution: need matching length and n <= 20");
    }
    std::vector<double> law(size_t{1} << n, 0.0);
    for (const auto &[c, p] : spec.atoms()) {
        BitString r = star(a, c);
        size_t index = 0;
        for (size_t j = 0; j < n; ++j) {
            index |= static_cast<size_t>(r[j]) << j;
        }
        law[index] += p;
    }
    return law;
}

}  // namespace paulilearn
