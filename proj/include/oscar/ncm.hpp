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

#ifndef OSCAR_NCM_HPP
#define OSCAR_NCM_HPP

#include <optional>
#include <vector>

#include "oscar/landscape.hpp"
#include "oscar/reconstruct.hpp"

namespace oscar {

/// Noise compensation model: affine map fitted by ordinary least squares that
/// carries expected values measured on one device onto the scale of a
/// reference device.
struct LinearNcm {
    double slope = 1.0;
    double intercept = 0.0;
    std::size_t training_pairs = 0;
    double residual_rms = 0.0;

    nlohmann::json to_json() const;
    static LinearNcm from_json(const nlohmann::json& j);
};

/// Fits values_ref ~ slope * values_src + intercept. Both vectors must come
/// from the same parameter points. A constant source series leaves the slope
/// undetermined and raises std::domain_error.
LinearNcm ncm_train(const std::vector<double>& values_src, const std::vector<double>& values_ref);

std::vector<double> ncm_transform(const std::vector<double>& values, const LinearNcm& model);

/// Merges reference samples with (optionally compensated) samples from a
/// second source and reconstructs. Overlapping indices keep the reference
/// value.
Landscape mixed_reconstruct(const GridSpec& spec, const MeasurementSet& ref_samples,
                            const MeasurementSet& other_samples, const std::optional<LinearNcm>& model,
                            const SolverConfig& config);

}  // namespace oscar

#endif
