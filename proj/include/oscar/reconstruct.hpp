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

#ifndef OSCAR_RECONSTRUCT_HPP
#define OSCAR_RECONSTRUCT_HPP

#include <cstddef>
#include <optional>
#include <vector>

namespace oscar {

/// Cost values measured at a subset of grid points. `indices` are flattened
/// column-major grid indices, strictly increasing; `values[i]` is the
/// measured cost at `indices[i]`.
struct MeasurementSet {
    std::vector<std::size_t> indices;
    std::vector<double> values;
    std::vector<std::size_t> grid_shape;

    std::size_t grid_size() const;
    void validate() const;
};

struct SolverConfig {
    /// l1 weight. Unset selects 1e-6 * ||A^T y||_inf, which behaves like
    /// basis pursuit on clean samples while tolerating shot noise.
    std::optional<double> lambda;
    std::size_t max_iters = 5000;
    double tolerance = 1e-7;
    bool step_backtracking = false;
};

struct ReconstructionResult {
    std::vector<double> values;  // dense grid, column-major
    bool converged = false;
    double residual_l2 = 0.0;  // ||C Psi s - y||_2 at the returned solution
    std::size_t iterations = 0;
    double lambda_used = 0.0;
};

/// Recovers a dense landscape from point samples by minimizing
/// 0.5 ||C Psi s - y||^2 + lambda ||s||_1 over DCT coefficients s with FISTA,
/// then returning Psi s. The operator is applied matrix-free (inverse DCT
/// followed by a gather at the sampled indices), so no n x n matrix is ever
/// formed. Non-convergence within max_iters is reported through the
/// `converged` flag, never thrown.
ReconstructionResult reconstruct(const MeasurementSet& meas, const SolverConfig& config);

}  // namespace oscar

#endif
