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

#ifndef OSCAR_SPLINE_HPP
#define OSCAR_SPLINE_HPP

#include <span>
#include <vector>

#include "oscar/landscape.hpp"

namespace oscar {

/// Natural bicubic spline over a 2-D gridded landscape: 1-D natural cubic
/// splines along axis 1 are precomputed per row, and each query chains a
/// natural spline across the row values at the query ordinate. Node-exact,
/// C2 between patches, exact on affine data. Queries outside the grid
/// rectangle are clamped to it.
class BicubicInterpolator {
  public:
    explicit BicubicInterpolator(const Landscape& landscape);

    double at(double u, double v) const;
    double eval(std::span<const double> point) const;

    const GridSpec& domain() const { return spec_; }

  private:
    GridSpec spec_;
    std::vector<double> x_;       // axis-0 coordinates (n0)
    std::vector<double> y_;       // axis-1 coordinates (n1)
    std::vector<double> values_;  // column-major, n0 * n1
    std::vector<double> d2y_;     // second derivatives along axis 1, per row
};

/// Natural cubic spline second derivatives (zero at both ends).
void natural_spline_d2(std::span<const double> xs, std::span<const double> ys, std::span<double> out_d2);

/// Spline evaluation on interval [xs[k], xs[k+1]].
double spline_eval(std::span<const double> xs, std::span<const double> ys, std::span<const double> d2, double u);

}  // namespace oscar

#endif
