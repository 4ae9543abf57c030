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

#ifndef OSCAR_PROBLEM_HPP
#define OSCAR_PROBLEM_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace oscar {

struct Edge {
    int i = 0;
    int j = 0;
    double weight = 1.0;
};

enum class ProblemKind { MaxCut, SK };

/// Cost Hamiltonian couplings for a combinatorial instance. The cost of a
/// bitstring z is sum over edges of w_ij (1 - z_i z_j) / 2 with z in {-1,+1},
/// i.e. the (weighted) cut value.
struct ProblemInstance {
    int n_qubits = 0;
    ProblemKind kind = ProblemKind::MaxCut;
    std::vector<Edge> edges;
    std::string id;  // provenance label, e.g. "maxcut3-n8-seed7"

    void validate() const;
    double total_weight() const;
};

/// Uniform random `degree`-regular graph on n vertices via the pairing model
/// (resampled until simple). n * degree must be even.
ProblemInstance random_regular_graph(int n, int degree, std::uint64_t seed);

/// Fully connected instance with couplings drawn per seed: uniform +/-1 by
/// default, standard normal when `gaussian` is set.
ProblemInstance random_sk(int n, std::uint64_t seed, bool gaussian = false);

nlohmann::json problem_to_json(const ProblemInstance& problem);
ProblemInstance problem_from_json(const nlohmann::json& j);

}  // namespace oscar

#endif
