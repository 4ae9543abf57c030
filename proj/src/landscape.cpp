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

#include "oscar/landscape.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace oscar {

void Landscape::validate() const {
    if (values.size() != spec.total_points()) {
        throw std::invalid_argument("Landscape: value count does not match grid");
    }
    for (double v : values) {
        if (!std::isfinite(v)) {
            throw std::invalid_argument("Landscape: non-finite value");
        }
    }
}

bool Landscape::operator==(const Landscape& other) const {
    if (!(spec == other.spec) || meta != other.meta || values.size() != other.values.size()) {
        return false;
    }
    // bitwise comparison; NaNs are rejected at construction anyway
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i] != other.values[i]) {
            return false;
        }
    }
    return true;
}

Landscape make_landscape(GridSpec spec, std::vector<double> values, nlohmann::json meta) {
    Landscape l{std::move(spec), std::move(values), std::move(meta)};
    l.validate();
    return l;
}

namespace {

// Linearly interpolated quantile of sorted data (the common "type 7" rule).
double quantile_sorted(const std::vector<double>& sorted, double p) {
    const double h = p * static_cast<double>(sorted.size() - 1);
    const std::size_t lo = static_cast<std::size_t>(h);
    if (lo + 1 >= sorted.size()) {
        return sorted.back();
    }
    const double frac = h - static_cast<double>(lo);
    return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

}  // namespace

double nrmse_values(const std::vector<double>& truth, const std::vector<double>& recon) {
    if (truth.size() != recon.size() || truth.empty()) {
        throw std::invalid_argument("nrmse: size mismatch");
    }
    double sq = 0.0;
    for (std::size_t i = 0; i < truth.size(); ++i) {
        const double d = truth[i] - recon[i];
        sq += d * d;
    }
    const double rmse = std::sqrt(sq / static_cast<double>(truth.size()));

    std::vector<double> sorted = truth;
    std::sort(sorted.begin(), sorted.end());
    const double iqr = quantile_sorted(sorted, 0.75) - quantile_sorted(sorted, 0.25);
    if (iqr <= 0.0) {
        throw std::domain_error("nrmse: truth has zero interquartile range");
    }
    return rmse / iqr;
}

double nrmse(const Landscape& truth, const Landscape& recon) {
    if (!(truth.spec == recon.spec)) {
        throw std::invalid_argument("nrmse: landscapes have different grids");
    }
    return nrmse_values(truth.values, recon.values);
}

namespace {

// Walks every 1-D line along `axis` of a column-major array and accumulates
// per-line d2 and vog.
template <typename LineFn>
void for_each_line(const std::vector<std::size_t>& shape, std::size_t axis, LineFn&& fn) {
    std::size_t stride = 1;
    for (std::size_t d = 0; d < axis; ++d) {
        stride *= shape[d];
    }
    const std::size_t n = shape[axis];
    std::size_t total = 1;
    for (std::size_t s : shape) {
        total *= s;
    }
    const std::size_t block = stride * n;
    for (std::size_t base = 0; base < total; base += block) {
        for (std::size_t off = 0; off < stride; ++off) {
            fn(base + off, stride, n);
        }
    }
}

double population_variance(const std::vector<double>& v) {
    double mean = 0.0;
    for (double x : v) {
        mean += x;
    }
    mean /= static_cast<double>(v.size());
    double acc = 0.0;
    for (double x : v) {
        const double d = x - mean;
        acc += d * d;
    }
    return acc / static_cast<double>(v.size());
}

}  // namespace

LandscapeMetrics metrics(const Landscape& landscape) {
    landscape.validate();
    const auto shape = landscape.spec.shape();
    for (std::size_t s : shape) {
        if (s < 3) {
            throw std::invalid_argument("metrics: every axis must have length >= 3");
        }
    }
    const auto& v = landscape.values;

    double d2_sum = 0.0, vog_sum = 0.0;
    std::size_t line_count = 0;
    std::vector<double> diffs;
    for (std::size_t axis = 0; axis < shape.size(); ++axis) {
        for_each_line(shape, axis, [&](std::size_t start, std::size_t stride, std::size_t n) {
            double d2 = 0.0;
            for (std::size_t i = 2; i < n; ++i) {
                const double s = v[start + i * stride] - 2.0 * v[start + (i - 1) * stride] + v[start + (i - 2) * stride];
                d2 += s * s;
            }
            d2_sum += d2 / 4.0;

            diffs.resize(n - 1);
            for (std::size_t i = 1; i < n; ++i) {
                diffs[i - 1] = v[start + i * stride] - v[start + (i - 1) * stride];
            }
            vog_sum += population_variance(diffs);
            ++line_count;
        });
    }

    LandscapeMetrics m;
    m.d2 = d2_sum / static_cast<double>(line_count);
    m.vog = vog_sum / static_cast<double>(line_count);
    m.variance = population_variance(v);
    return m;
}

Landscape reshape_to_2d(const Landscape& landscape) {
    const auto& dims = landscape.spec.dims();
    if (dims.size() != 4 || dims[0].count != dims[1].count || dims[2].count != dims[3].count) {
        throw std::invalid_argument("reshape_to_2d: expected 4-D grid with dims (a, a, b, b)");
    }
    const std::size_t a = dims[0].count;
    const std::size_t b = dims[2].count;

    nlohmann::json original_dims = nlohmann::json::array();
    for (const auto& d : dims) {
        original_dims.push_back({{"name", d.name}, {"lo", d.lo}, {"hi", d.hi}, {"count", d.count}});
    }
    nlohmann::json meta = landscape.meta;
    meta["reshaped_from"] = original_dims;

    GridSpec spec2(
        {
            {dims[0].name + "x" + dims[1].name, 0.0, static_cast<double>(a * a - 1), a * a},
            {dims[2].name + "x" + dims[3].name, 0.0, static_cast<double>(b * b - 1), b * b},
        });
    // Column-major pairing keeps the flat layout intact: flat index
    // i0 + a(i1 + a(i2 + b i3)) equals (i0 + a i1) + a^2 (i2 + b i3).
    return make_landscape(std::move(spec2), landscape.values, std::move(meta));
}

Landscape reshape_from_2d(const Landscape& landscape) {
    if (landscape.spec.rank() != 2 || !landscape.meta.contains("reshaped_from")) {
        throw std::invalid_argument("reshape_from_2d: landscape was not produced by reshape_to_2d");
    }
    std::vector<GridDim> dims;
    for (const auto& d : landscape.meta.at("reshaped_from")) {
        dims.push_back({d.at("name").get<std::string>(), d.at("lo").get<double>(), d.at("hi").get<double>(),
                        d.at("count").get<std::size_t>()});
    }
    nlohmann::json meta = landscape.meta;
    meta.erase("reshaped_from");
    return make_landscape(GridSpec(dims), landscape.values, std::move(meta));
}

MeasurementSet measure_at(const Landscape& landscape, const std::vector<std::size_t>& indices) {
    MeasurementSet meas;
    meas.indices = indices;
    meas.grid_shape = landscape.spec.shape();
    meas.values.reserve(indices.size());
    for (std::size_t idx : indices) {
        meas.values.push_back(landscape.values.at(idx));
    }
    meas.validate();
    return meas;
}

Landscape reconstruct_landscape(const GridSpec& spec, const MeasurementSet& meas, const SolverConfig& config,
                                nlohmann::json meta) {
    if (spec.shape() != meas.grid_shape) {
        throw std::invalid_argument("reconstruct_landscape: grid shape mismatch");
    }
    ReconstructionResult res = reconstruct(meas, config);
    meta["reconstruction"] = {
        {"samples", meas.indices.size()},
        {"converged", res.converged},
        {"residual_l2", res.residual_l2},
        {"iterations", res.iterations},
        {"lambda", res.lambda_used},
    };
    return make_landscape(spec, std::move(res.values), std::move(meta));
}

}  // namespace oscar
