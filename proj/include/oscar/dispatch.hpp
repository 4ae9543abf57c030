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

#ifndef OSCAR_DISPATCH_HPP
#define OSCAR_DISPATCH_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "oscar/landscape.hpp"
#include "oscar/reconstruct.hpp"

namespace oscar {

/// Simulated per-job completion latency: base plus a lognormal tail drawn
/// from a stream keyed by (seed, job index). tail_scale = 0 gives an exact
/// zero-tail model for tests. Latency shapes timing and timeout membership
/// only; measured values never depend on it.
struct LatencyModel {
    double base = 0.0;
    double tail_mu = 0.0;
    double tail_sigma = 1.0;
    double tail_scale = 1.0;
    std::uint64_t seed = 0;

    double latency_for(std::size_t job_index) const;
};

struct DispatchReport {
    MeasurementSet completed;                    // sorted by flattened index
    std::vector<std::size_t> timed_out_indices;  // missed the soft timeout
    std::vector<std::size_t> failed_indices;     // evaluator threw
    double wall_time = 0.0;                      // virtual seconds
    std::vector<std::size_t> per_worker_counts;  // jobs assigned per worker

    nlohmann::json to_json() const;
};

using JobEvaluator = std::function<double(std::size_t)>;

/// Runs the requested grid-point jobs on k simulated workers (greedy
/// next-free-worker on a virtual clock). Jobs whose completion time exceeds
/// the soft timeout are reported timed-out instead of evaluated. The
/// evaluator must be pure in the job index, which makes completed values
/// independent of worker count and scheduling order.
DispatchReport dispatch(const std::vector<std::size_t>& job_indices, const std::vector<std::size_t>& grid_shape,
                        const JobEvaluator& evaluator, unsigned k_workers, const LatencyModel& latency,
                        std::optional<double> soft_timeout);

/// Reconstruction from whatever completed before the timeout. meta records
/// the omitted fraction.
Landscape eager_reconstruct(const GridSpec& spec, const DispatchReport& report, const SolverConfig& config);

}  // namespace oscar

#endif
