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

#include "oscar/zne.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "oscar/rng.hpp"

namespace oscar {

void ZneConfig::validate() const {
    if (scale_factors.size() < 2) {
        throw std::invalid_argument("ZneConfig: at least 2 scale factors required");
    }
    for (std::size_t i = 0; i < scale_factors.size(); ++i) {
        if (scale_factors[i] < 1.0) {
            throw std::invalid_argument("ZneConfig: scale factors must be >= 1");
        }
        if (i > 0 && scale_factors[i] <= scale_factors[i - 1]) {
            throw std::invalid_argument("ZneConfig: scale factors must be strictly increasing");
        }
    }
}

nlohmann::json ZneConfig::to_json() const {
    return {{"scale_factors", scale_factors},
            {"extrapolation", extrapolation == Extrapolation::Linear ? "linear" : "richardson"}};
}

ZneConfig ZneConfig::from_json(const nlohmann::json& j) {
    ZneConfig z;
    z.scale_factors = j.at("scale_factors").get<std::vector<double>>();
    const std::string method = j.at("extrapolation").get<std::string>();
    if (method == "linear") {
        z.extrapolation = Extrapolation::Linear;
    } else if (method == "richardson") {
        z.extrapolation = Extrapolation::Richardson;
    } else {
        throw std::invalid_argument("ZneConfig: unknown extrapolation " + method);
    }
    z.validate();
    return z;
}

Circuit fold_scale(const Circuit& circuit, double factor) {
    if (factor < 1.0) {
        throw std::invalid_argument("fold_scale: factor must be >= 1");
    }
    const std::size_t g = circuit.size();
    if (g == 0 || factor == 1.0) {
        return circuit;
    }
    // Each fold of a gate appends U' U, adding 2 gates. Distribute
    // round(g (factor - 1) / 2) fold pairs: every gate gets `full` folds and
    // the first `rem` gates one more, so folding grows from the circuit start.
    const std::size_t pairs = static_cast<std::size_t>(std::llround(static_cast<double>(g) * (factor - 1.0) / 2.0));
    const std::size_t full = pairs / g;
    const std::size_t rem = pairs % g;

    Circuit folded;
    folded.n_qubits = circuit.n_qubits;
    folded.gates.reserve(g + 2 * pairs);
    for (std::size_t i = 0; i < g; ++i) {
        const Gate& u = circuit.gates[i];
        folded.gates.push_back(u);
        const std::size_t folds = full + (i < rem ? 1 : 0);
        for (std::size_t k = 0; k < folds; ++k) {
            folded.gates.push_back(u.inverse());
            folded.gates.push_back(u);
        }
    }
    return folded;
}

double extrapolate(const std::vector<std::pair<double, double>>& points, Extrapolation method) {
    if (points.size() < 2) {
        throw std::invalid_argument("extrapolate: at least 2 points required");
    }
    if (method == Extrapolation::Linear) {
        double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
        const double n = static_cast<double>(points.size());
        for (const auto& [x, y] : points) {
            sx += x;
            sy += y;
            sxx += x * x;
            sxy += x * y;
        }
        const double denom = n * sxx - sx * sx;
        if (denom == 0.0) {
            throw std::invalid_argument("extrapolate: degenerate abscissae for linear fit");
        }
        const double slope = (n * sxy - sx * sy) / denom;
        return (sy - slope * sx) / n;  // intercept at scale 0
    }

    // Richardson: Lagrange interpolation evaluated at 0.
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            if (points[i].first == points[j].first) {
                throw std::invalid_argument("extrapolate: Richardson requires distinct scales");
            }
        }
    }
    double acc = 0.0;
    for (std::size_t i = 0; i < points.size(); ++i) {
        double w = 1.0;
        for (std::size_t j = 0; j < points.size(); ++j) {
            if (j != i) {
                w *= (0.0 - points[j].first) / (points[i].first - points[j].first);
            }
        }
        acc += w * points[i].second;
    }
    return acc;
}

ZneValue zne_expectation(const ProblemInstance& problem, const AnsatzConfig& ansatz, std::span<const double> params,
                         const NoiseModel& noise, const ZneConfig& zne, std::uint64_t seed) {
    zne.validate();
    const Circuit base = build_ansatz_circuit(problem, ansatz, params);
    std::vector<std::pair<double, double>> points;
    points.reserve(zne.scale_factors.size());
    for (std::size_t s = 0; s < zne.scale_factors.size(); ++s) {
        const Circuit folded = fold_scale(base, zne.scale_factors[s]);
        points.emplace_back(zne.scale_factors[s], expectation_of_circuit(problem, folded, noise, derive_seed(seed, s)));
    }
    return ZneValue{extrapolate(points, zne.extrapolation), zne.scale_factors.size()};
}

Landscape mitigated_landscape(const ProblemInstance& problem, const AnsatzConfig& ansatz, const GridSpec& spec,
                              const NoiseModel& noise, const ZneConfig& zne, std::uint64_t seed, unsigned threads) {
    if (spec.rank() != ansatz.parameter_count(problem.n_qubits)) {
        throw std::invalid_argument("mitigated_landscape: grid rank must equal ansatz parameter count");
    }
    zne.validate();
    const std::size_t n = spec.total_points();
    std::vector<double> values(n);

    auto worker = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            const std::vector<double> p = spec.point_at(i);
            values[i] = zne_expectation(problem, ansatz, p, noise, zne, derive_seed(seed, i)).value;
        }
    };

    if (threads <= 1 || n < 2) {
        worker(0, n);
    } else {
        const unsigned t = std::min<unsigned>(threads, static_cast<unsigned>(n));
        std::vector<std::thread> pool;
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
    meta["mitigation"] = zne.to_json();
    meta["queries_per_point"] = zne.scale_factors.size();
    meta["seed"] = seed;
    return make_landscape(spec, std::move(values), std::move(meta));
}

}  // namespace oscar
