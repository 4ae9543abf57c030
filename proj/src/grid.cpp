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

#include "oscar/grid.hpp"

#include <cmath>
#include <stdexcept>

#include "oscar/rng.hpp"

namespace oscar {

GridSpec::GridSpec(std::vector<GridDim> dims, std::size_t point_cap) : dims_(std::move(dims)) {
    if (dims_.empty()) {
        throw std::invalid_argument("GridSpec: at least one dimension required");
    }
    std::size_t total = 1;
    for (const auto& d : dims_) {
        if (d.count < 2) {
            throw std::invalid_argument("GridSpec: dimension '" + d.name + "' needs count >= 2");
        }
        if (!(d.lo < d.hi)) {
            throw std::invalid_argument("GridSpec: dimension '" + d.name + "' needs lo < hi");
        }
        if (total > point_cap / d.count) {
            throw std::invalid_argument("GridSpec: total points exceed cap of " + std::to_string(point_cap));
        }
        total *= d.count;
    }
}

std::size_t GridSpec::total_points() const {
    std::size_t total = 1;
    for (const auto& d : dims_) {
        total *= d.count;
    }
    return total;
}

std::vector<std::size_t> GridSpec::shape() const {
    std::vector<std::size_t> s;
    s.reserve(dims_.size());
    for (const auto& d : dims_) {
        s.push_back(d.count);
    }
    return s;
}

double GridSpec::axis_value(std::size_t dim, std::size_t i) const {
    const auto& d = dims_.at(dim);
    return d.lo + (d.hi - d.lo) * static_cast<double>(i) / static_cast<double>(d.count - 1);
}

double GridSpec::spacing(std::size_t dim) const {
    const auto& d = dims_.at(dim);
    return (d.hi - d.lo) / static_cast<double>(d.count - 1);
}

std::vector<double> GridSpec::axis_points(std::size_t dim) const {
    const auto& d = dims_.at(dim);
    std::vector<double> pts(d.count);
    for (std::size_t i = 0; i < d.count; ++i) {
        pts[i] = axis_value(dim, i);
    }
    return pts;
}

std::vector<double> GridSpec::point_at(std::size_t flat_index) const {
    std::vector<double> p(dims_.size());
    std::size_t rest = flat_index;
    for (std::size_t d = 0; d < dims_.size(); ++d) {
        const std::size_t i = rest % dims_[d].count;
        rest /= dims_[d].count;
        p[d] = axis_value(d, i);
    }
    return p;
}

bool GridSpec::operator==(const GridSpec& other) const {
    if (dims_.size() != other.dims_.size()) {
        return false;
    }
    for (std::size_t d = 0; d < dims_.size(); ++d) {
        const auto& a = dims_[d];
        const auto& b = other.dims_[d];
        if (a.name != b.name || a.lo != b.lo || a.hi != b.hi || a.count != b.count) {
            return false;
        }
    }
    return true;
}

std::vector<std::vector<double>> grid_points(const GridSpec& spec) {
    const std::size_t n = spec.total_points();
    std::vector<std::vector<double>> pts;
    pts.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        pts.push_back(spec.point_at(i));
    }
    return pts;
}

std::vector<std::size_t> sample_uniform(const GridSpec& spec, double fraction, std::uint64_t seed) {
    const std::size_t n = spec.total_points();
    if (!(fraction > 0.0) || fraction > 1.0) {
        throw std::invalid_argument("sample_uniform: fraction must be in (0, 1]");
    }
    const std::size_t m = static_cast<std::size_t>(std::ceil(fraction * static_cast<double>(n)));
    if (m < 1) {
        throw std::invalid_argument("sample_uniform: fraction * n must be >= 1");
    }
    Rng rng(seed);
    return sample_without_replacement(n, m, rng);
}

GridSpec paper_p1_grid() {
    const double pi = 3.14159265358979323846;
    return GridSpec({
        {"beta0", -pi / 4.0, pi / 4.0, 50},
        {"gamma0", -pi / 2.0, pi / 2.0, 100},
    });
}

GridSpec paper_p2_grid() {
    const double pi = 3.14159265358979323846;
    return GridSpec({
        {"beta0", -pi / 8.0, pi / 8.0, 12},
        {"beta1", -pi / 8.0, pi / 8.0, 12},
        {"gamma0", -pi / 4.0, pi / 4.0, 15},
        {"gamma1", -pi / 4.0, pi / 4.0, 15},
    });
}

}  // namespace oscar
