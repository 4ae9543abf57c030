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

#ifndef OSCAR_GRID_HPP
#define OSCAR_GRID_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace oscar {

/// One axis of a rectangular parameter grid: `count` points spread linearly
/// over [lo, hi], endpoints included.
struct GridDim {
    std::string name;
    double lo = 0.0;
    double hi = 0.0;
    std::size_t count = 0;
};

/// Rectangular grid over circuit parameters. Flattened indices are
/// column-major: dimension 0 varies fastest.
class GridSpec {
  public:
    static constexpr std::size_t kDefaultPointCap = 1000000;

    GridSpec() = default;
    explicit GridSpec(std::vector<GridDim> dims, std::size_t point_cap = kDefaultPointCap);

    const std::vector<GridDim>& dims() const { return dims_; }
    std::size_t rank() const { return dims_.size(); }
    std::size_t total_points() const;
    std::vector<std::size_t> shape() const;

    /// Coordinate of point `i` along dimension `dim` (linspace, inclusive).
    double axis_value(std::size_t dim, std::size_t i) const;

    /// Grid step along one dimension.
    double spacing(std::size_t dim) const;

    /// All `count` coordinates of one axis.
    std::vector<double> axis_points(std::size_t dim) const;

    /// Decodes a flattened index into one parameter vector.
    std::vector<double> point_at(std::size_t flat_index) const;

    bool operator==(const GridSpec& other) const;

  private:
    std::vector<GridDim> dims_;
};

/// Every grid point in column-major order. Size is the product of the counts.
std::vector<std::vector<double>> grid_points(const GridSpec& spec);

/// ceil(fraction * n) distinct flattened indices, uniform without
/// replacement, sorted ascending. Deterministic per seed.
std::vector<std::size_t> sample_uniform(const GridSpec& spec, double fraction, std::uint64_t seed);

/// The named grids from the reference experiments: depth-1 QAOA over
/// (beta, gamma) = ([-pi/4, pi/4] x 50, [-pi/2, pi/2] x 100) and depth-2 over
/// (12, 12, 15, 15) points.
GridSpec paper_p1_grid();
GridSpec paper_p2_grid();

}  // namespace oscar

#endif
