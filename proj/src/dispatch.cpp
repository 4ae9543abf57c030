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

#include "oscar/dispatch.hpp"

#include <algorithm>
#include <stdexcept>

#include "oscar/rng.hpp"

namespace oscar {

double LatencyModel::latency_for(std::size_t job_index) const {
    if (base < 0.0 || tail_scale < 0.0 || tail_sigma < 0.0) {
        throw std::invalid_argument("LatencyModel: base, tail_scale and tail_sigma must be >= 0");
    }
    if (tail_scale == 0.0) {
        return base;
    }
    Rng rng(derive_seed(seed, job_index));
    return base + tail_scale * rng.lognormal(tail_mu, tail_sigma);
}

nlohmann::json DispatchReport::to_json() const {
    return {{"completed_indices", completed.indices},
            {"completed_values", completed.values},
            {"timed_out_indices", timed_out_indices},
            {"failed_indices", failed_indices},
            {"wall_time", wall_time},
            {"per_worker_counts", per_worker_counts}};
}

DispatchReport dispatch(const std::vector<std::size_t>& job_indices, const std::vector<std::size_t>& grid_shape,
                        const JobEvaluator& evaluator, unsigned k_workers, const LatencyModel& latency,
                        std::optional<double> soft_timeout) {
    if (k_workers < 1) {
        throw std::invalid_argument("dispatch: k_workers must be >= 1");
    }
    if (job_indices.empty()) {
        throw std::invalid_argument("dispatch: no jobs");
    }

    DispatchReport report;
    report.per_worker_counts.assign(k_workers, 0);
    std::vector<double> free_at(k_workers, 0.0);

    std::vector<std::pair<std::size_t, double>> done;  // (index, value)
    double max_finish = 0.0;
    bool any_timed_out = false;

    for (std::size_t job : job_indices) {
        // greedy: earliest-free worker, lowest id on ties
        std::size_t w = 0;
        for (std::size_t k = 1; k < k_workers; ++k) {
            if (free_at[k] < free_at[w]) {
                w = k;
            }
        }
        const double start = free_at[w];
        const double finish = start + latency.latency_for(job);
        free_at[w] = finish;
        ++report.per_worker_counts[w];
        max_finish = std::max(max_finish, finish);

        if (soft_timeout && finish > *soft_timeout) {
            report.timed_out_indices.push_back(job);
            any_timed_out = true;
            continue;
        }
        try {
            done.emplace_back(job, evaluator(job));
        } catch (const std::exception&) {
            report.failed_indices.push_back(job);
        }
    }

    std::sort(done.begin(), done.end());
    report.completed.grid_shape = grid_shape;
    report.completed.indices.reserve(done.size());
    report.completed.values.reserve(done.size());
    for (const auto& [idx, v] : done) {
        report.completed.indices.push_back(idx);
        report.completed.values.push_back(v);
    }
    std::sort(report.timed_out_indices.begin(), report.timed_out_indices.end());
    std::sort(report.failed_indices.begin(), report.failed_indices.end());

    // The caller stops waiting at the soft timeout once stragglers exist.
    report.wall_time = (soft_timeout && any_timed_out) ? *soft_timeout : max_finish;
    return report;
}

Landscape eager_reconstruct(const GridSpec& spec, const DispatchReport& report, const SolverConfig& config) {
    if (report.completed.indices.empty()) {
        throw std::invalid_argument("eager_reconstruct: no completed samples");
    }
    const std::size_t requested =
        report.completed.indices.size() + report.timed_out_indices.size() + report.failed_indices.size();
    nlohmann::json meta;
    meta["eager"] = {
        {"requested", requested},
        {"completed", report.completed.indices.size()},
        {"omitted_fraction",
         static_cast<double>(requested - report.completed.indices.size()) / static_cast<double>(requested)},
        {"wall_time", report.wall_time},
    };
    return reconstruct_landscape(spec, report.completed, config, std::move(meta));
}

}  // namespace oscar
