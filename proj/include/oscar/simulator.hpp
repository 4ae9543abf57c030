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

#ifndef OSCAR_SIMULATOR_HPP
#define OSCAR_SIMULATOR_HPP

#include <cstdint>
#include <span>

#include "oscar/circuit.hpp"
#include "oscar/landscape.hpp"
#include "oscar/problem.hpp"

namespace oscar {

/// Depolarizing noise per gate, simulated by stochastic Pauli insertion
/// (trajectory method). Every 1-qubit gate carries one p1q channel, every
/// 2-qubit gate one two-qubit p2q channel. shots = 0 computes exact
/// expectations from the statevector; shots > 0 adds multinomial sampling of
/// the output distribution.
struct NoiseModel {
    double p1q = 0.0;
    double p2q = 0.0;
    std::size_t trajectories = 200;
    std::size_t shots = 0;

    bool is_noisy() const { return p1q > 0.0 || p2q > 0.0; }
    void validate() const;
    nlohmann::json to_json() const;
    static NoiseModel from_json(const nlohmann::json& j);
};

/// Expected cut cost of an explicit circuit (used directly by noise-scaled
/// ZNE circuits). Deterministic per seed.
double expectation_of_circuit(const ProblemInstance& problem, const Circuit& circuit, const NoiseModel& noise,
                              std::uint64_t seed);

/// Expected cut cost of the ansatz at one parameter point.
double expectation(const ProblemInstance& problem, const AnsatzConfig& ansatz, std::span<const double> params,
                   const NoiseModel& noise, std::uint64_t seed);

/// Dense landscape over `spec` (one expectation per grid point). Each point
/// gets an independent RNG stream derived from (seed, index), so results are
/// identical no matter how many threads evaluate the grid.
Landscape generate_landscape(const ProblemInstance& problem, const AnsatzConfig& ansatz, const GridSpec& spec,
                             const NoiseModel& noise, std::uint64_t seed, unsigned threads = 1);

}  // namespace oscar

#endif
