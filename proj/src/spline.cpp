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

#include "oscar/spline.hpp"

#include <algorithm>
#include <stdexcept>

namespace oscar {

void natural_spline_d2(std::span<const double> xs, std::span<const double> ys, std::span<double> out_d2) {
    const std::size_t n = xs.size();
    out_d2[0] = 0.0;
    out_d2[n - 1] = 0.0;
    if (n == 2) {
        return;
    }
    // Tridiagonal sweep (Thomas algorithm) with natural end conditions.
    std::vector<double> c_prime(n, 0.0);
    std::vector<double> d_prime(n, 0.0);
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const double h_lo = xs[i] - xs[i - 1];
        const double h_hi = xs[i + 1] - xs[i];
        const double a = h_lo / 6.0;
        const double b = (xs[i + 1] - xs[i - 1]) / 3.0;
        const double c = h_hi / 6.0;
        const double rhs = (ys[i + 1] - ys[i]) / h_hi - (ys[i] - ys[i - 1]) / h_lo;
        const double m = b - a * c_prime[i - 1];
        c_prime[i] = c / m;
        d_prime[i] = (rhs - a * d_prime[i - 1]) / m;
    }
    for (std::size_t i = n - 2; i >= 1; --i) {
        out_d2[i] = d_prime[i] - c_prime[i] * out_d2[i + 1];
    }
}

double spline_eval(std::span<const double> xs, std::span<const double> ys, std::span<const double> d2, double u) {
    const std::size_t n = xs.size();
    const auto it = std::upper_bound(xs.begin(), xs.end(), u);
    std::size_t k = it == xs.begin() ? 0 : static_cast<std::size_t>(it - xs.begin()) - 1;
    k = std::min(k, n - 2);
    const double h = xs[k + 1] - xs[k];
    const double a = (xs[k + 1] - u) / h;
    const double b = (u - xs[k]) / h;
    return a * ys[k] + b * ys[k + 1] +
           ((a * a * a - a) * d2[k] + (b * b * b - b) * d2[k + 1]) * h * h / 6.0;
}

BicubicInterpolator::BicubicInterpolator(const Landscape& landscape) : spec_(landscape.spec) {
    if (spec_.rank() != 2) {
        throw std::invalid_argument("BicubicInterpolator: 2-D landscape required");
    }
    const std::size_t n0 = spec_.dims()[0].count;
    const std::size_t n1 = spec_.dims()[1].count;
    if (n0 < 4 || n1 < 4) {
        throw std::invalid_argument("BicubicInterpolator: both axes need >= 4 points");
    }
    landscape.validate();
    x_ = spec_.axis_points(0);
    y_ = spec_.axis_points(1);
    values_ = landscape.values;
    d2y_.assign(n0 * n1, 0.0);

    std::vector<double> row(n1), row_d2(n1);
    for (std::size_t i = 0; i < n0; ++i) {
        for (std::size_t j = 0; j < n1; ++j) {
            row[j] = values_[i + n0 * j];
        }
        natural_spline_d2(y_, row, row_d2);
        for (std::size_t j = 0; j < n1; ++j) {
            d2y_[i + n0 * j] = row_d2[j];
        }
    }
}

double BicubicInterpolator::at(double u, double v) const {
    u = std::clamp(u, x_.front(), x_.back());
    v = std::clamp(v, y_.front(), y_.back());

    const std::size_t n0 = x_.size();
    const std::size_t n1 = y_.size();

    // Evaluate each row spline at v, then spline across the rows at u.
    const auto it = std::upper_bound(y_.begin(), y_.end(), v);
    std::size_t k = it == y_.begin() ? 0 : static_cast<std::size_t>(it - y_.begin()) - 1;
    k = std::min(k, n1 - 2);
    const double h = y_[k + 1] - y_[k];
    const double a = (y_[k + 1] - v) / h;
    const double b = (v - y_[k]) / h;
    const double qa = (a * a * a - a) * h * h / 6.0;
    const double qb = (b * b * b - b) * h * h / 6.0;

    std::vector<double> g(n0), g_d2(n0);
    for (std::size_t i = 0; i < n0; ++i) {
        g[i] = a * values_[i + n0 * k] + b * values_[i + n0 * (k + 1)] +
               qa * d2y_[i + n0 * k] + qb * d2y_[i + n0 * (k + 1)];
    }
    natural_spline_d2(x_, g, g_d2);
    return spline_eval(x_, g, g_d2, u);
}

double BicubicInterpolator::eval(std::span<const double> point) const {
    if (point.size() != 2) {
        throw std::invalid_argument("BicubicInterpolator: 2-D point required");
    }
    return at(point[0], point[1]);
}

}  // namespace oscar
