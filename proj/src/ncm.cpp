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

#include "oscar/ncm.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

namespace oscar {

nlohmann::json LinearNcm::to_json() const {
    return {{"slope", slope}, {"intercept", intercept}, {"training_pairs", training_pairs}, {"residual_rms", residual_rms}};
}

LinearNcm LinearNcm::from_json(const nlohmann::json& j) {
    LinearNcm m;
    m.slope = j.at("slope").get<double>();
    m.intercept = j.at("intercept").get<double>();
    m.training_pairs = j.value("training_pairs", std::size_t{0});
    m.residual_rms = j.value("residual_rms", 0.0);
    return m;
}

LinearNcm ncm_train(const std::vector<double>& values_src, const std::vector<double>& values_ref) {
    if (values_src.size() != values_ref.size() || values_src.size() < 2) {
        throw std::invalid_argument("ncm_train: need two equal-length series with >= 2 points");
    }
    const double n = static_cast<double>(values_src.size());
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < values_src.size(); ++i) {
        sx += values_src[i];
        sy += values_ref[i];
        sxx += values_src[i] * values_src[i];
        sxy += values_src[i] * values_ref[i];
    }
    const double denom = n * sxx - sx * sx;
    const double scale = sxx + sx * sx / n;
    if (denom <= 1e-12 * std::max(scale, 1.0)) {
        throw std::domain_error("ncm_train: source values are constant, fit is degenerate");
    }
    LinearNcm m;
    m.slope = (n * sxy - sx * sy) / denom;
    m.intercept = (sy - m.slope * sx) / n;
    m.training_pairs = values_src.size();
    double rss = 0.0;
    for (std::size_t i = 0; i < values_src.size(); ++i) {
        const double r = values_ref[i] - (m.slope * values_src[i] + m.intercept);
        rss += r * r;
    }
    m.residual_rms = std::sqrt(rss / n);
    if (!std::isfinite(m.slope) || !std::isfinite(m.intercept)) {
        throw std::domain_error("ncm_train: non-finite fit");
    }
    return m;
}

std::vector<double> ncm_transform(const std::vector<double>& values, const LinearNcm& model) {
    std::vector<double> out(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        out[i] = model.slope * values[i] + model.intercept;
    }
    return out;
}

Landscape mixed_reconstruct(const GridSpec& spec, const MeasurementSet& ref_samples,
                            const MeasurementSet& other_samples, const std::optional<LinearNcm>& model,
                            const SolverConfig& config) {
    if (ref_samples.indices.empty() && other_samples.indices.empty()) {
        throw std::invalid_argument("mixed_reconstruct: no samples");
    }
    const std::vector<std::size_t>& shape =
        ref_samples.indices.empty() ? other_samples.grid_shape : ref_samples.grid_shape;
    if (!ref_samples.indices.empty() && !other_samples.indices.empty() &&
        ref_samples.grid_shape != other_samples.grid_shape) {
        throw std::invalid_argument("mixed_reconstruct: sample sets target different grids");
    }

    // Other-source samples first so an overlapping reference sample wins.
    std::map<std::size_t, double> merged;
    const std::vector<double> other_values =
        model ? ncm_transform(other_samples.values, *model) : other_samples.values;
    for (std::size_t i = 0; i < other_samples.indices.size(); ++i) {
        merged[other_samples.indices[i]] = other_values[i];
    }
    for (std::size_t i = 0; i < ref_samples.indices.size(); ++i) {
        merged[ref_samples.indices[i]] = ref_samples.values[i];
    }

    MeasurementSet mix;
    mix.grid_shape = shape;
    mix.indices.reserve(merged.size());
    mix.values.reserve(merged.size());
    for (const auto& [idx, v] : merged) {
        mix.indices.push_back(idx);
        mix.values.push_back(v);
    }

    nlohmann::json meta;
    meta["mix"] = {
        {"ref_samples", ref_samples.indices.size()},
        {"other_samples", other_samples.indices.size()},
        {"ncm", model ? model->to_json() : nlohmann::json(nullptr)},
    };
    return reconstruct_landscape(spec, mix, config, std::move(meta));
}

}  // namespace oscar
