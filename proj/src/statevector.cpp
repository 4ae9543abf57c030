// Copyright 2026 The OSCAR authors
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

#include "oscar/statevector.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace oscar {

namespace {
constexpr double kInvSqrt2 = 0.70710678118654752440084436210485;
}

Statevector::Statevector(int n_qubits) : n_qubits_(n_qubits) {
    if (n_qubits < 1 || n_qubits > 20) {
        throw std::invalid_argument("Statevector: n_qubits must be in [1, 20]");
    }
    amp_.assign(std::size_t{1} << n_qubits, {0.0, 0.0});
    amp_[0] = {1.0, 0.0};
}

void Statevector::apply(const Gate& gate) {
    const std::size_t dim = amp_.size();
    if (gate.kind == GateKind::CX) {
        const std::size_t cbit = std::size_t{1} << gate.q0;
        const std::size_t tbit = std::size_t{1} << gate.q1;
        for (std::size_t b = 0; b < dim; ++b) {
            if ((b & cbit) && !(b & tbit)) {
                std::swap(amp_[b], amp_[b | tbit]);
            }
        }
        return;
    }

    const std::size_t bit = std::size_t{1} << gate.q0;
    // single-qubit unitary [[u00, u01], [u10, u11]]
    std::complex<double> u00, u01, u10, u11;
    switch (gate.kind) {
        case GateKind::H:
            u00 = u01 = u10 = kInvSqrt2;
            u11 = -kInvSqrt2;
            break;
        case GateKind::RX: {
            const double c = std::cos(gate.angle / 2.0), s = std::sin(gate.angle / 2.0);
            u00 = u11 = c;
            u01 = u10 = std::complex<double>(0.0, -s);
            break;
        }
        case GateKind::RY: {
            const double c = std::cos(gate.angle / 2.0), s = std::sin(gate.angle / 2.0);
            u00 = u11 = c;
            u01 = -s;
            u10 = s;
            break;
        }
        case GateKind::RZ: {
            const double half = gate.angle / 2.0;
            u00 = std::polar(1.0, -half);
            u11 = std::polar(1.0, half);
            u01 = u10 = 0.0;
            break;
        }
        default:
            throw std::logic_error("Statevector: unhandled gate kind");
    }
    for (std::size_t b = 0; b < dim; ++b) {
        if (b & bit) {
            continue;
        }
        const std::complex<double> a0 = amp_[b];
        const std::complex<double> a1 = amp_[b | bit];
        amp_[b] = u00 * a0 + u01 * a1;
        amp_[b | bit] = u10 * a0 + u11 * a1;
    }
}

void Statevector::apply_circuit(const Circuit& circuit) {
    if (circuit.n_qubits != n_qubits_) {
        throw std::invalid_argument("Statevector: circuit qubit count mismatch");
    }
    for (const auto& g : circuit.gates) {
        apply(g);
    }
}

void Statevector::apply_pauli(int q, int pauli) {
    const std::size_t bit = std::size_t{1} << q;
    const std::size_t dim = amp_.size();
    switch (pauli) {
        case 1:  // X
            for (std::size_t b = 0; b < dim; ++b) {
                if (!(b & bit)) {
                    std::swap(amp_[b], amp_[b | bit]);
                }
            }
            break;
        case 2:  // Y
            for (std::size_t b = 0; b < dim; ++b) {
                if (!(b & bit)) {
                    const std::complex<double> a0 = amp_[b];
                    const std::complex<double> a1 = amp_[b | bit];
                    amp_[b] = std::complex<double>(a1.imag(), -a1.real());   // -i * a1
                    amp_[b | bit] = std::complex<double>(-a0.imag(), a0.real());  // i * a0
                }
            }
            break;
        case 3:  // Z
            for (std::size_t b = 0; b < dim; ++b) {
                if (b & bit) {
                    amp_[b] = -amp_[b];
                }
            }
            break;
        default:
            throw std::invalid_argument("Statevector: pauli must be 1, 2 or 3");
    }
}

double Statevector::norm() const {
    double s = 0.0;
    for (const auto& a : amp_) {
        s += std::norm(a);
    }
    return std::sqrt(s);
}

namespace {

inline double cut_cost(const ProblemInstance& problem, std::size_t basis) {
    double c = 0.0;
    for (const auto& e : problem.edges) {
        const bool bi = (basis >> e.i) & 1;
        const bool bj = (basis >> e.j) & 1;
        if (bi != bj) {
            c += e.weight;
        }
    }
    return c;
}

}  // namespace

double Statevector::cut_expectation(const ProblemInstance& problem) const {
    double acc = 0.0;
    for (std::size_t b = 0; b < amp_.size(); ++b) {
        const double p = std::norm(amp_[b]);
        if (p > 0.0) {
            acc += p * cut_cost(problem, b);
        }
    }
    return acc;
}

double Statevector::cut_sampled(const ProblemInstance& problem, std::size_t shots, Rng& rng) const {
    std::vector<double> cdf(amp_.size());
    double acc = 0.0;
    for (std::size_t b = 0; b < amp_.size(); ++b) {
        acc += std::norm(amp_[b]);
        cdf[b] = acc;
    }
    double total_cost = 0.0;
    for (std::size_t s = 0; s < shots; ++s) {
        const double u = rng.uniform() * acc;
        const auto it = std::lower_bound(cdf.begin(), cdf.end(), u);
        const std::size_t b = static_cast<std::size_t>(it - cdf.begin());
        total_cost += cut_cost(problem, b < amp_.size() ? b : amp_.size() - 1);
    }
    return total_cost / static_cast<double>(shots);
}

}  // namespace oscar
