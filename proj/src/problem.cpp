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

#include "oscar/problem.hpp"

#include <set>
#include <stdexcept>

#include "oscar/rng.hpp"

namespace oscar {

void ProblemInstance::validate() const {
    if (n_qubits < 2 || n_qubits > 20) {
        throw std::invalid_argument("ProblemInstance: n_qubits must be in [2, 20]");
    }
    std::set<std::pair<int, int>> seen;
    for (const auto& e : edges) {
        if (!(0 <= e.i && e.i < e.j && e.j < n_qubits)) {
            throw std::invalid_argument("ProblemInstance: edge endpoints must satisfy 0 <= i < j < n");
        }
        if (!seen.insert({e.i, e.j}).second) {
            throw std::invalid_argument("ProblemInstance: duplicate edge");
        }
    }
}

double ProblemInstance::total_weight() const {
    double w = 0.0;
    for (const auto& e : edges) {
        w += e.weight;
    }
    return w;
}

ProblemInstance random_regular_graph(int n, int degree, std::uint64_t seed) {
    if (n < 2 || degree < 1 || degree >= n) {
        throw std::invalid_argument("random_regular_graph: need 1 <= degree < n");
    }
    if ((static_cast<long long>(n) * degree) % 2 != 0) {
        throw std::invalid_argument("random_regular_graph: n * degree must be even");
    }

    Rng rng(seed);
    // Pairing model: shuffle n*degree half-edge stubs and pair them up;
    // reject matchings with loops or parallel edges.
    const int stubs_n = n * degree;
    std::vector<int> stubs(stubs_n);
    for (int attempt = 0; attempt < 10000; ++attempt) {
        for (int s = 0; s < stubs_n; ++s) {
            stubs[s] = s / degree;
        }
        for (int s = 0; s < stubs_n - 1; ++s) {
            const int j = s + static_cast<int>(rng.below(static_cast<std::uint64_t>(stubs_n - s)));
            std::swap(stubs[s], stubs[j]);
        }
        std::set<std::pair<int, int>> edge_set;
        bool ok = true;
        for (int s = 0; s < stubs_n; s += 2) {
            int a = stubs[s], b = stubs[s + 1];
            if (a == b) {
                ok = false;
                break;
            }
            if (a > b) {
                std::swap(a, b);
            }
            if (!edge_set.insert({a, b}).second) {
                ok = false;
                break;
            }
        }
        if (!ok) {
            continue;
        }
        ProblemInstance p;
        p.n_qubits = n;
        p.kind = ProblemKind::MaxCut;
        for (const auto& [a, b] : edge_set) {
            p.edges.push_back({a, b, 1.0});
        }
        p.id = "maxcut" + std::to_string(degree) + "-n" + std::to_string(n) + "-seed" + std::to_string(seed);
        p.validate();
        return p;
    }
    throw std::runtime_error("random_regular_graph: failed to build a simple graph");
}

ProblemInstance random_sk(int n, std::uint64_t seed, bool gaussian) {
    if (n < 2) {
        throw std::invalid_argument("random_sk: need n >= 2");
    }
    Rng rng(seed);
    ProblemInstance p;
    p.n_qubits = n;
    p.kind = ProblemKind::SK;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const double w = gaussian ? rng.normal() : (rng.bernoulli(0.5) ? 1.0 : -1.0);
            p.edges.push_back({i, j, w});
        }
    }
    p.id = std::string("sk") + (gaussian ? "-gauss" : "") + "-n" + std::to_string(n) + "-seed" + std::to_string(seed);
    p.validate();
    return p;
}

nlohmann::json problem_to_json(const ProblemInstance& problem) {
    nlohmann::json j;
    j["qubits"] = problem.n_qubits;
    j["kind"] = problem.kind == ProblemKind::MaxCut ? "maxcut" : "sk";
    j["id"] = problem.id;
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& e : problem.edges) {
        edges.push_back({e.i, e.j, e.weight});
    }
    j["edges"] = edges;
    return j;
}

ProblemInstance problem_from_json(const nlohmann::json& j) {
    ProblemInstance p;
    p.n_qubits = j.at("qubits").get<int>();
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "maxcut") {
        p.kind = ProblemKind::MaxCut;
    } else if (kind == "sk") {
        p.kind = ProblemKind::SK;
    } else {
        throw std::invalid_argument("unknown problem kind: " + kind);
    }
    p.id = j.value("id", "");
    for (const auto& e : j.at("edges")) {
        p.edges.push_back({e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<double>()});
    }
    p.validate();
    return p;
}

}  // namespace oscar
