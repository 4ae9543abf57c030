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

#include "oscar/circuit.hpp"

namespace oscar {

Gate Gate::inverse() const {
    switch (kind) {
        case GateKind::H:
        case GateKind::CX:
            return *this;
        case GateKind::RX:
        case GateKind::RY:
        case GateKind::RZ: {
            Gate g = *this;
            g.angle = -angle;
            return g;
        }
    }
    return *this;
}

Circuit build_ansatz_circuit(const ProblemInstance& problem, const AnsatzConfig& ansatz, std::span<const double> params) {
    const int n = problem.n_qubits;
    if (params.size() != ansatz.parameter_count(n)) {
        throw std::invalid_argument("build_ansatz_circuit: parameter count mismatch");
    }
    Circuit c;
    c.n_qubits = n;

    if (ansatz.kind == AnsatzKind::QAOA) {
        const int p = ansatz.depth;
        for (int q = 0; q < n; ++q) {
            c.gates.push_back({GateKind::H, q, -1, 0.0});
        }
        for (int layer = 0; layer < p; ++layer) {
            const double beta = params[static_cast<std::size_t>(layer)];
            const double gamma = params[static_cast<std::size_t>(p + layer)];
            // Cost phase exp(-i gamma w (1 - Z Z) / 2) per edge, realized as
            // CX . RZ(-gamma w) . CX up to a global phase.
            for (const auto& e : problem.edges) {
                c.gates.push_back({GateKind::CX, e.i, e.j, 0.0});
                c.gates.push_back({GateKind::RZ, e.j, -1, -gamma * e.weight});
                c.gates.push_back({GateKind::CX, e.i, e.j, 0.0});
            }
            for (int q = 0; q < n; ++q) {
                c.gates.push_back({GateKind::RX, q, -1, 2.0 * beta});
            }
        }
    } else {
        const int layers = ansatz.depth;
        std::size_t k = 0;
        for (int layer = 0; layer < layers; ++layer) {
            for (int q = 0; q < n; ++q) {
                c.gates.push_back({GateKind::RY, q, -1, params[k++]});
            }
            for (int q = 0; q + 1 < n; ++q) {
                c.gates.push_back({GateKind::CX, q, q + 1, 0.0});
            }
        }
        for (int q = 0; q < n; ++q) {
            c.gates.push_back({GateKind::RY, q, -1, params[k++]});
        }
    }
    return c;
}

}  // namespace oscar
