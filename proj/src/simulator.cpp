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

#include "oscar/simulator.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

#include "oscar/statevector.hpp"

namespace oscar {

void NoiseModel::validate() const {
    if (p1q < 0.0 || p1q >= 1.0 || p2q < 0.0 || p2q >= 1.0) {
        throw std::invalid_argument("NoiseModel: probabilities must be in [0, 1)");
    }
    if (is_noisy() && trajectories < 1) {
        throw std::invalid_argument("NoiseModel: trajectories must be >= 1 when noise is present");
    }
}

nlohmann::json NoiseModel::to_json() const {
    return {{"p1q", p1q}, {"p2q", p2q}, {"trajectories", trajectories}, {"shots", shots}};
}

NoiseModel NoiseModel::from_json(const nlohmann::json& j) {
    NoiseModel n;
    n.p1q = j.value("p1q", 0.0);
    n.p2q = j.value("p2q", 0.0);
    n.trajectories = j.value("trajectories", std::size_t{200});
    n.shots = j.value("shots", std::size_t{0});
    n.validate();
    return n;
}

namespace {

// One noisy pass: after each gate a depolarizing channel fires with the
// gate-class probability and inserts a uniformly random non-identity Pauli
// (15 choices on the two qubits of a CX).
void run_trajectory(Statevector& state, const Circuit& circuit, const NoiseModel& noise, Rng& rng) {
    for (const auto& g : circuit.gates) {
        state.apply(g);
        if (g.is_two_qubit()) {
            if (noise.p2q > 0.0 && rng.bernoulli(noise.p2q)) {
                const int k = static_cast<int>(rng.below(15)) + 1;  // 1..15, skips I(x)I
                const int pa = k / 4;
                const int pb = k % 4;
                if (pa != 0) {
                    state.apply_pauli(g.q0, pa);
                }
                if (pb != 0) {
                    state.apply_pauli(g.q1, pb);
                }
            }
        } else if (noise.p1q > 0.0 && rng.bernoulli(noise.p1q)) {
            state.apply_pauli(g.q0, static_cast<int>(rng.below(3)) + 1);
        }
    }
}

}  // namespace

double expectation_of_circuit(const ProblemInstance& problem, const Circuit& circuit, const NoiseModel& noise,
                              std::uint64_t seed) {
    problem.validate();
    noise.validate();

    if (!noise.is_noisy()) {
        Statevector state(problem.n_qubits);
        state.apply_circuit(circuit);
        if (noise.shots == 0) {
            return state.cut_expectation(problem);
        }
        Rng rng(derive_seed(seed, 0));
        return state.cut_sampled(problem, noise.shots, rng);
    }

    const std::size_t traj = noise.trajectories;
    const std::size_t shots_per_traj = noise.shots == 0 ? 0 : (noise.shots + traj - 1) / traj;
    double acc = 0.0;
    for (std::size_t t = 0; t < traj; ++t) {
        Rng rng(derive_seed(seed, t));
        Statevector state(problem.n_qubits);
        run_trajectory(state, circuit, noise, rng);
        acc += shots_per_traj == 0 ? state.cut_expectation(problem) : state.cut_sampled(problem, shots_per_traj, rng);
    }
    return acc / static_cast<double>(traj);
}

double expectation(const ProblemInstance& problem, const AnsatzConfig& ansatz, std::span<const double> params,
                   const NoiseModel& noise, std::uint64_t seed) {
    const Circuit circuit = build_ansatz_circuit(problem, ansatz, params);
    return expectation_of_circuit(problem, circuit, noise, seed);
}

Landscape generate_landscape(const ProblemInstance& problem, const AnsatzConfig& ansatz, const GridSpec& spec,
                             const NoiseModel& noise, std::uint64_t seed, unsigned threads) {
    if (spec.rank() != ansatz.parameter_count(problem.n_qubits)) {
        throw std::invalid_argument("generate_landscape: grid rank must equal ansatz parameter count");
    }
    const std::size_t n = spec.total_points();
    std::vector<double> values(n);

    auto worker = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            const std::vector<double> p = spec.point_at(i);
            values[i] = expectation(problem, ansatz, p, noise, derive_seed(seed, i));
        }
    };

    if (threads <= 1 || n < 2) {
        worker(0, n);
    } else {
        const unsigned t = std::min<unsigned>(threads, static_cast<unsigned>(n));
        std::vector<std::thread> pool;
        pool.reserve(t);
        const std::size_t chunk = (n + t - 1) / t;
        for (unsigned k = 0; k < t; ++k) {
            const std::size_t begin = k * chunk;
            const std::size_t end = std::min(n, begin + chunk);
            if (begin < end) {
                pool.emplace_back(worker, begin, end);
            }
        }
        for (auto& th : pool) {
            th.join();
        }
    }

    nlohmann::json meta;
    meta["problem"] = problem_to_json(problem);
    meta["ansatz"] = {{"kind", ansatz.name()}, {"depth", ansatz.depth}};
    meta["noise"] = noise.to_json();
    meta["seed"] = seed;
    return make_landscape(spec, std::move(values), std::move(meta));
}

}  // namespace oscar
