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

#ifndef OSCAR_ZNE_HPP
#define OSCAR_ZNE_HPP

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "oscar/circuit.hpp"
#include "oscar/landscape.hpp"
#include "oscar/simulator.hpp"

namespace oscar {

enum class Extrapolation { Linear, Richardson };

/// Zero-noise extrapolation setup: run the circuit at the given noise scale
/// factors and extrapolate the expectations back to scale 0.
struct ZneConfig {
    std::vector<double> scale_factors;
    Extrapolation extrapolation = Extrapolation::Richardson;

    void validate() const;
    nlohmann::json to_json() const;
    static ZneConfig from_json(const nlohmann::json& j);
};

/// Scales a circuit's noise exposure by gate folding. An odd integer factor k
/// turns every gate U into U (U'U)^((k-1)/2); other factors fold the leading
/// gates one extra time until the total gate count is as close as possible to
/// factor * original. The folded circuit is the identity-equivalent of the
/// original in the noiseless limit.
Circuit fold_scale(const Circuit& circuit, double factor);

/// Zero-noise estimate from (scale, value) pairs. Linear fits a least-squares
/// line and returns its intercept; Richardson evaluates the unique
/// interpolating polynomial at 0 (Lagrange form).
double extrapolate(const std::vector<std::pair<double, double>>& points, Extrapolation method);

struct ZneValue {
    double value = 0.0;
    std::size_t circuit_evaluations = 0;  // one per scale factor
};

/// Noise-mitigated expectation at one parameter point.
ZneValue zne_expectation(const ProblemInstance& problem, const AnsatzConfig& ansatz, std::span<const double> params,
                         const NoiseModel& noise, const ZneConfig& zne, std::uint64_t seed);

/// ZNE applied per grid point. meta records the mitigation config and the
/// per-point circuit-evaluation count.
Landscape mitigated_landscape(const ProblemInstance& problem, const AnsatzConfig& ansatz, const GridSpec& spec,
                              const NoiseModel& noise, const ZneConfig& zne, std::uint64_t seed, unsigned threads = 1);

}  // namespace oscar

#endif
