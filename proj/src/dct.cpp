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

#include "oscar/dct.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace oscar {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

DctPlan::DctPlan(std::vector<std::size_t> shape) : shape_(std::move(shape)) {
    if (shape_.empty()) {
        throw std::invalid_argument("DctPlan: empty shape");
    }
    total_ = 1;
    for (std::size_t n : shape_) {
        if (n < 1) {
            throw std::invalid_argument("DctPlan: dimension sizes must be >= 1");
        }
        total_ *= n;
    }
    basis_.reserve(shape_.size());
    for (std::size_t n : shape_) {
        std::vector<double> m(n * n);
        const double a0 = std::sqrt(1.0 / static_cast<double>(n));
        const double ak = std::sqrt(2.0 / static_cast<double>(n));
        for (std::size_t k = 0; k < n; ++k) {
            const double alpha = (k == 0) ? a0 : ak;
            for (std::size_t t = 0; t < n; ++t) {
                m[k * n + t] = alpha * std::cos(kPi * (2.0 * t + 1.0) * k / (2.0 * static_cast<double>(n)));
            }
        }
        basis_.push_back(std::move(m));
    }
}

// Applies the per-axis basis matrix (or its transpose for the inverse) along
// every axis in turn. Lines along axis d sit at stride = prod(shape[0..d)).
std::vector<double> DctPlan::apply(const std::vector<double>& data, bool forward_direction) const {
    if (data.size() != total_) {
        throw std::invalid_argument("DctPlan: data length does not match shape");
    }
    std::vector<double> cur = data;
    std::vector<double> line;
    std::vector<double> out_line;
    std::size_t stride = 1;
    for (std::size_t d = 0; d < shape_.size(); ++d) {
        const std::size_t n = shape_[d];
        const auto& m = basis_[d];
        line.resize(n);
        out_line.resize(n);
        const std::size_t block = stride * n;
        for (std::size_t base = 0; base < total_; base += block) {
            for (std::size_t off = 0; off < stride; ++off) {
                const std::size_t start = base + off;
                for (std::size_t t = 0; t < n; ++t) {
                    line[t] = cur[start + t * stride];
                }
                for (std::size_t k = 0; k < n; ++k) {
                    double acc = 0.0;
                    if (forward_direction) {
                        const double* row = &m[k * n];
                        for (std::size_t t = 0; t < n; ++t) {
                            acc += row[t] * line[t];
                        }
                    } else {
                        // transpose: column k of the basis matrix
                        for (std::size_t t = 0; t < n; ++t) {
                            acc += m[t * n + k] * line[t];
                        }
                    }
                    out_line[k] = acc;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    cur[start + k * stride] = out_line[k];
                }
            }
        }
        stride *= n;
    }
    return cur;
}

std::vector<double> DctPlan::forward(const std::vector<double>& grid) const {
    return apply(grid, true);
}

std::vector<double> DctPlan::inverse(const std::vector<double>& coeffs) const {
    return apply(coeffs, false);
}

SparseCoefficients dct_forward(const std::vector<double>& grid, const std::vector<std::size_t>& shape) {
    if (grid.empty()) {
        throw std::invalid_argument("dct_forward: empty grid");
    }
    DctPlan plan(shape);
    return SparseCoefficients{plan.forward(grid), shape};
}

std::vector<double> dct_inverse(const SparseCoefficients& coeffs) {
    DctPlan plan(coeffs.shape);
    if (coeffs.values.size() != plan.total_size()) {
        throw std::invalid_argument("dct_inverse: coefficient length does not match shape");
    }
    return plan.inverse(coeffs.values);
}

double sparsity_fraction(const std::vector<double>& grid, const std::vector<std::size_t>& shape, double energy) {
    if (grid.empty()) {
        throw std::invalid_argument("sparsity_fraction: empty grid");
    }
    if (!(energy > 0.0) || energy > 1.0) {
        throw std::invalid_argument("sparsity_fraction: energy must be in (0, 1]");
    }
    auto coeffs = dct_forward(grid, shape);
    std::vector<double> sq(coeffs.values.size());
    double total = 0.0;
    for (std::size_t i = 0; i < coeffs.values.size(); ++i) {
        sq[i] = coeffs.values[i] * coeffs.values[i];
        total += sq[i];
    }
    if (total == 0.0) {
        return 0.0;
    }
    std::sort(sq.begin(), sq.end(), std::greater<double>());
    const double target = energy * total;
    double acc = 0.0;
    std::size_t k = 0;
    while (k < sq.size() && acc < target) {
        acc += sq[k];
        ++k;
    }
    return static_cast<double>(k) / static_cast<double>(sq.size());
}

}  // namespace oscar
