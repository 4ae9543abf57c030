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

#ifndef OSCAR_LANDSCAPE_HPP
#define OSCAR_LANDSCAPE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "oscar/grid.hpp"
#include "oscar/reconstruct.hpp"

namespace oscar {

/// Dense cost landscape over a grid. Values are column-major over the grid
/// dims and always finite; `meta` is free-form provenance (problem, ansatz,
/// noise, mitigation, shots, seed) carried through every transformation.
struct Landscape {
    GridSpec spec;
    std::vector<double> values;
    nlohmann::json meta;

    std::size_t size() const { return values.size(); }
    void validate() const;

    bool operator==(const Landscape& other) const;
};

Landscape make_landscape(GridSpec spec, std::vector<double> values, nlohmann::json meta);

/// Root-mean-square error between the two landscapes, normalized by the
/// interquartile range Q3 - Q1 of the truth. Quartiles use linear
/// interpolation on the sorted values. A constant truth has no interquartile
/// range and raises std::domain_error.
double nrmse(const Landscape& truth, const Landscape& recon);

/// Same metric on raw value arrays (used before a reconstruction is wrapped
/// into a Landscape).
double nrmse_values(const std::vector<double>& truth, const std::vector<double>& recon);

struct LandscapeMetrics {
    double d2 = 0.0;        // mean per-line sum of squared second differences / 4
    double vog = 0.0;       // mean per-line variance of first differences
    double variance = 0.0;  // population variance of all values
};

/// Roughness and flatness metrics. d2 and vog are computed on every 1-D line
/// along every axis and averaged over all lines and axes; variance is taken
/// over the whole value array. Axes must have length >= 3 (d2) and >= 2 (vog).
LandscapeMetrics metrics(const Landscape& landscape);

/// Folds a 4-D landscape with dims (a, a, b, b) into a 2-D one with dims
/// (a^2, b^2) by pairing (dim0, dim1) into rows and (dim2, dim3) into
/// columns. The column-major flat layout is unchanged, so the operation is
/// exactly invertible; the original dims are kept in meta for the inverse.
Landscape reshape_to_2d(const Landscape& landscape);
Landscape reshape_from_2d(const Landscape& landscape);

/// Measurements gathered from a landscape at the given sorted indices.
MeasurementSet measure_at(const Landscape& landscape, const std::vector<std::size_t>& indices);

/// Convenience wrapper: reconstruct a landscape from measurements, attaching
/// the grid ranges and provenance.
Landscape reconstruct_landscape(const GridSpec& spec, const MeasurementSet& meas, const SolverConfig& config,
                                nlohmann::json meta);

}  // namespace oscar

#endif
