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

#ifndef OSCAR_DCT_HPP
#define OSCAR_DCT_HPP

#include <cstddef>
#include <vector>

namespace oscar {

/// Coefficients of a grid in the separable orthonormal DCT basis, together
/// with the grid shape they decode to. values.size() equals the product of
/// the shape entries; storage is column-major like the grid itself.
struct SparseCoefficients {
    std::vector<double> values;
    std::vector<std::size_t> shape;
};

/// Separable orthonormal DCT-II over a column-major dense grid of the given
/// shape. Precomputes one cosine basis matrix per axis; forward and inverse
/// are exact transposes of each other, so the round trip is the identity and
/// the transform preserves the l2 norm.
class DctPlan {
  public:
    explicit DctPlan(std::vector<std::size_t> shape);

    const std::vector<std::size_t>& shape() const { return shape_; }
    std::size_t total_size() const { return total_; }

    /// Analysis transform: grid values -> DCT coefficients.
    std::vector<double> forward(const std::vector<double>& grid) const;

    /// Synthesis transform: DCT coefficients -> grid values.
    std::vector<double> inverse(const std::vector<double>& coeffs) const;

  private:
    // basis_[d] is the count x count orthonormal DCT-II matrix of axis d,
    // row-major with basis[k*count + t] = alpha_k cos(pi (2t+1) k / (2 count)).
    std::vector<std::size_t> shape_;
    std::size_t total_ = 0;
    std::vector<std::vector<double>> basis_;

    std::vector<double> apply(const std::vector<double>& data, bool forward_direction) const;
};

SparseCoefficients dct_forward(const std::vector<double>& grid, const std::vector<std::size_t>& shape);
std::vector<double> dct_inverse(const SparseCoefficients& coeffs);

/// Smallest fraction k/n of largest-magnitude DCT coefficients whose squared
/// sum reaches `energy` times the total squared sum. Returns 0 for an
/// all-zero grid.
double sparsity_fraction(const std::vector<double>& grid, const std::vector<std::size_t>& shape, double energy);

}  // namespace oscar

#endif
