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

#ifndef OSCAR_STATEVECTOR_HPP
#define OSCAR_STATEVECTOR_HPP

#include <complex>
#include <vector>

#include "oscar/circuit.hpp"
#include "oscar/rng.hpp"

namespace oscar {

/// Dense statevector over up to 20 qubits, initialized to |0...0>. Qubit q
/// corresponds to bit q of the basis index.
class Statevector {
  public:
    explicit Statevector(int n_qubits);

    int n_qubits() const { return n_qubits_; }
    std::size_t dim() const { return amp_.size(); }
    const std::vector<std::complex<double>>& amplitudes() const { return amp_; }

    void apply(const Gate& gate);
    void apply_circuit(const Circuit& circuit);

    /// Pauli insertion for noise trajectories. pauli: 1 = X, 2 = Y, 3 = Z.
    void apply_pauli(int q, int pauli);

    double norm() const;

    /// <C> for the diagonal cut cost of `problem`.
    double cut_expectation(const ProblemInstance& problem) const;

    /// Mean cut cost over `shots` multinomial draws from |amp|^2.
    double cut_sampled(const ProblemInstance& problem, std::size_t shots, Rng& rng) const;

  private:
    int n_qubits_;
    std::vector<std::complex<double>> amp_;
};

}  // namespace oscar

#endif
