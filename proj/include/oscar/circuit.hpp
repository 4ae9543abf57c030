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

#ifndef OSCAR_CIRCUIT_HPP
#define OSCAR_CIRCUIT_HPP

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "oscar/problem.hpp"

namespace oscar {

enum class GateKind { H, RX, RY, RZ, CX };

struct Gate {
    GateKind kind = GateKind::H;
    int q0 = 0;
    int q1 = -1;  // second qubit for CX, otherwise -1
    double angle = 0.0;

    bool is_two_qubit() const { return kind == GateKind::CX; }
    Gate inverse() const;
};

struct Circuit {
    int n_qubits = 0;
    std::vector<Gate> gates;

    std::size_t size() const { return gates.size(); }
};

enum class AnsatzKind { QAOA, TwoLocal };

/// Which parametric circuit family to run. QAOA with depth p has 2p
/// parameters (p betas then p gammas); TwoLocal with L layers has
/// n * (L + 1) parameters (one Ry angle per qubit per rotation layer).
struct AnsatzConfig {
    AnsatzKind kind = AnsatzKind::QAOA;
    int depth = 1;  // p for QAOA, entangling layers for TwoLocal

    std::size_t parameter_count(int n_qubits) const {
        if (depth < 1) {
            throw std::invalid_argument("AnsatzConfig: depth must be >= 1");
        }
        if (kind == AnsatzKind::QAOA) {
            return 2 * static_cast<std::size_t>(depth);
        }
        return static_cast<std::size_t>(n_qubits) * static_cast<std::size_t>(depth + 1);
    }

    const char* name() const { return kind == AnsatzKind::QAOA ? "qaoa" : "twolocal"; }
};

/// Builds the gate sequence for one parameter point. QAOA: H on every qubit,
/// then per layer the cost phase (CX, RZ, CX per edge) and the RX mixer.
/// TwoLocal: Ry on every qubit and a linear CX chain per layer, plus a final
/// Ry layer.
Circuit build_ansatz_circuit(const ProblemInstance& problem, const AnsatzConfig& ansatz, std::span<const double> params);

}  // namespace oscar

#endif
