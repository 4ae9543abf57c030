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

#ifndef OSCAR_OPTIMIZER_HPP
#define OSCAR_OPTIMIZER_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "oscar/landscape.hpp"
#include "oscar/simulator.hpp"
#include "oscar/spline.hpp"

namespace oscar {

using ObjectiveFn = std::function<double(const std::vector<double>&)>;

struct OptimizerRun {
    std::vector<std::vector<double>> path;  // iterate per accepted step, init first
    std::vector<double> values;             // objective at each path entry
    std::size_t evaluations = 0;            // every objective call, probes included
    std::size_t query_count = 0;            // QPU queries: evaluations, or 0 for interpolator-backed runs
    bool converged = false;

    const std::vector<double>& endpoint() const { return path.back(); }
    nlohmann::json to_json() const;
};

struct AdamConfig {
    double lr = 0.01;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double eps = 1e-8;
    std::size_t max_iters = 1000;
    double tol = 1e-6;       // stop when |value change| per iteration drops below
    double fd_step = 1e-3;   // central-difference step; landscape flows use spacing/2
    bool counts_as_qpu = true;
};

struct NelderMeadConfig {
    std::size_t max_iters = 1000;
    double tol = 1e-8;          // stop when the simplex value spread drops below
    double simplex_step = 0.1;  // initial per-dimension offset from init
    bool counts_as_qpu = true;
};

/// ADAM with central finite-difference gradients. Deterministic; throws
/// std::runtime_error on a non-finite objective value.
OptimizerRun adam(const ObjectiveFn& objective, const std::vector<double>& init, const AdamConfig& config);

/// Nelder-Mead with reflection/expansion/contraction/shrink = 1, 2, 0.5, 0.5.
OptimizerRun nelder_mead(const ObjectiveFn& objective, const std::vector<double>& init, const NelderMeadConfig& config);

/// Euclidean distance between the final iterates of two runs.
double endpoint_distance(const OptimizerRun& a, const OptimizerRun& b);

enum class OptimizerKind { Adam, NelderMead };

struct OscarInitConfig {
    double sampling_fraction = 0.1;
    std::uint64_t sample_seed = 0;
    std::uint64_t noise_seed = 0;
    SolverConfig solver;
    OptimizerKind optimizer = OptimizerKind::Adam;
    AdamConfig adam;
    NelderMeadConfig nelder_mead;
};

struct OscarInitResult {
    std::vector<double> init_point;  // endpoint of the interpolated-landscape run
    std::size_t recon_queries = 0;   // circuit evaluations spent on sampling
    OptimizerRun interp_run;         // zero QPU queries
    OptimizerRun live_run;           // circuit-backed optimization from init_point
};

/// Landscape-precheck initialization: sample a fraction of the grid, run the
/// circuit only there, reconstruct, interpolate, and optimize on the
/// interpolation (no further circuit runs). The endpoint seeds the live
/// circuit-backed optimization. The optimizer minimizes -<C>; query
/// accounting is split into reconstruction and optimization phases.
OscarInitResult oscar_init(const ProblemInstance& problem, const AnsatzConfig& ansatz, const GridSpec& spec,
                           const NoiseModel& noise, const OscarInitConfig& config);

/// Circuit-backed objective returning -<C>; each call advances a derived RNG
/// stream so noisy runs are reproducible.
ObjectiveFn live_objective(const ProblemInstance& problem, const AnsatzConfig& ansatz, const NoiseModel& noise,
                           std::uint64_t seed);

/// Interpolator-backed objective returning the negated spline value.
ObjectiveFn interp_objective(const BicubicInterpolator& interp);

}  // namespace oscar

#endif
