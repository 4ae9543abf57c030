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

#include <doctest.h>

#include <cmath>
#include <complex>
#include <set>
#include <utility>
#include <vector>

#include "oscar/rng.hpp"
#include "oscar/simulator.hpp"
#include "oscar/statevector.hpp"

using namespace oscar;

namespace {

using cd = std::complex<double>;
using Matrix = std::vector<std::vector<cd>>;  // dense, row-major

// Brute-force oracle: build full 2^n x 2^n gate matrices by Kronecker
// products and multiply them into the state. Independent of Statevector.
Matrix kron(const Matrix& a, const Matrix& b) {
    const std::size_t ra = a.size(), ca = a[0].size(), rb = b.size(), cb = b[0].size();
    Matrix out(ra * rb, std::vector<cd>(ca * cb));
    for (std::size_t i = 0; i < ra; ++i) {
        for (std::size_t j = 0; j < ca; ++j) {
            for (std::size_t k = 0; k < rb; ++k) {
                for (std::size_t l = 0; l < cb; ++l) {
                    out[i * rb + k][j * cb + l] = a[i][j] * b[k][l];
                }
            }
        }
    }
    return out;
}

// Embeds a 1-qubit matrix on qubit q of n qubits. Basis index bit q selects
// within the q-th factor, so the Kronecker chain runs from qubit n-1 down to
// qubit 0.
Matrix embed_1q(const Matrix& u, int q, int n) {
    const Matrix eye = {{1.0, 0.0}, {0.0, 1.0}};
    Matrix acc = (n - 1 == q) ? u : eye;
    for (int k = n - 2; k >= 0; --k) {
        acc = kron(acc, k == q ? u : eye);
    }
    return acc;
}

std::vector<cd> matvec(const Matrix& m, const std::vector<cd>& v) {
    std::vector<cd> out(m.size(), 0.0);
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = 0; j < v.size(); ++j) {
            out[i] += m[i][j] * v[j];
        }
    }
    return out;
}

double oracle_qaoa_p1(const ProblemInstance& problem, double beta, double gamma) {
    const int n = problem.n_qubits;
    const std::size_t dim = std::size_t{1} << n;
    std::vector<cd> state(dim, 0.0);
    state[0] = 1.0;

    const double s = 1.0 / std::sqrt(2.0);
    const Matrix h = {{s, s}, {s, -s}};
    for (int q = 0; q < n; ++q) {
        state = matvec(embed_1q(h, q, n), state);
    }
    // cost phase applied as the exact diagonal exp(-i gamma w (1 - ZZ) / 2)
    for (std::size_t b = 0; b < dim; ++b) {
        double cost = 0.0;
        for (const auto& e : problem.edges) {
            if (((b >> e.i) & 1) != ((b >> e.j) & 1)) {
                cost += e.weight;
            }
        }
        state[b] *= std::polar(1.0, -gamma * cost);
    }
    const cd i_unit(0.0, 1.0);
    const Matrix rx = {{std::cos(beta), -i_unit * std::sin(beta)}, {-i_unit * std::sin(beta), std::cos(beta)}};
    for (int q = 0; q < n; ++q) {
        state = matvec(embed_1q(rx, q, n), state);
    }

    double acc = 0.0;
    for (std::size_t b = 0; b < dim; ++b) {
        double cost = 0.0;
        for (const auto& e : problem.edges) {
            if (((b >> e.i) & 1) != ((b >> e.j) & 1)) {
                cost += e.weight;
            }
        }
        acc += std::norm(state[b]) * cost;
    }
    return acc;
}

ProblemInstance single_edge() {
    ProblemInstance p;
    p.n_qubits = 2;
    p.kind = ProblemKind::MaxCut;
    p.edges = {{0, 1, 1.0}};
    p.id = "edge";
    return p;
}

}  // namespace

TEST_CASE("zero angles leave the uniform superposition: <C> = total weight / 2") {
    const NoiseModel ideal;
    for (auto problem : {random_regular_graph(6, 3, 1), random_regular_graph(8, 3, 2), random_sk(5, 3)}) {
        AnsatzConfig qaoa{AnsatzKind::QAOA, 1};
        std::vector<double> params = {0.0, 0.0};
        const double v = expectation(problem, qaoa, params, ideal, 0);
        CHECK(v == doctest::Approx(problem.total_weight() / 2.0).epsilon(1e-12));
    }
}

TEST_CASE("single-edge p=1 expectation matches the dense-matrix oracle") {
    const auto problem = single_edge();
    const NoiseModel ideal;
    AnsatzConfig qaoa{AnsatzKind::QAOA, 1};
    const double pi = 3.14159265358979323846;

    for (auto [beta, gamma] : std::vector<std::pair<double, double>>{
             {pi / 8, pi / 2}, {0.3, -0.7}, {-0.2, 1.1}, {0.11, 0.0}}) {
        std::vector<double> params = {beta, gamma};
        const double got = expectation(problem, qaoa, params, ideal, 0);
        const double want = oracle_qaoa_p1(problem, beta, gamma);
        CHECK(got == doctest::Approx(want).epsilon(1e-11));
    }
}

TEST_CASE("oracle agreement on a 4-qubit graph") {
    const auto problem = random_regular_graph(4, 3, 9);  // K4
    const NoiseModel ideal;
    AnsatzConfig qaoa{AnsatzKind::QAOA, 1};
    std::vector<double> params = {0.37, -0.85};
    CHECK(expectation(problem, qaoa, params, ideal, 0) ==
          doctest::Approx(oracle_qaoa_p1(problem, 0.37, -0.85)).epsilon(1e-11));
}

TEST_CASE("noiseless trajectories collapse to the ideal expectation") {
    const auto problem = random_regular_graph(6, 3, 4);
    AnsatzConfig qaoa{AnsatzKind::QAOA, 1};
    std::vector<double> params = {0.4, 0.9};
    NoiseModel ideal;
    NoiseModel zero_noise;
    zero_noise.trajectories = 100;
    const double a = expectation(problem, qaoa, params, ideal, 7);
    const double b = expectation(problem, qaoa, params, zero_noise, 7);
    CHECK(a == b);  // exactly equal, not approximately
}

TEST_CASE("statevector norm stays 1 through a deep circuit") {
    const auto problem = random_sk(5, 6);
    AnsatzConfig qaoa{AnsatzKind::QAOA, 3};
    std::vector<double> params = {0.1, -0.4, 0.8, 1.2, -0.3, 0.5};
    const Circuit c = build_ansatz_circuit(problem, qaoa, params);
    Statevector state(problem.n_qubits);
    for (const auto& g : c.gates) {
        state.apply(g);
        CHECK(state.norm() == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("conjugation symmetry: <C>(-beta, -gamma) equals <C>(beta, gamma)") {
    const NoiseModel ideal;
    Rng rng(12);
    for (auto problem : {random_regular_graph(6, 3, 10), random_sk(4, 11)}) {
        for (int depth : {1, 2}) {
            AnsatzConfig qaoa{AnsatzKind::QAOA, depth};
            std::vector<double> params(2 * depth), negated(2 * depth);
            for (std::size_t k = 0; k < params.size(); ++k) {
                params[k] = rng.uniform(-1.5, 1.5);
                negated[k] = -params[k];
            }
            const double a = expectation(problem, qaoa, params, ideal, 0);
            const double b = expectation(problem, qaoa, negated, ideal, 0);
            CHECK(a == doctest::Approx(b).epsilon(1e-11));
        }
    }
}

TEST_CASE("unweighted MaxCut expectation stays within [0, total weight]") {
    const auto problem = random_regular_graph(8, 3, 13);
    const NoiseModel ideal;
    AnsatzConfig qaoa{AnsatzKind::QAOA, 1};
    Rng rng(14);
    for (int rep = 0; rep < 20; ++rep) {
        std::vector<double> params = {rng.uniform(-2.0, 2.0), rng.uniform(-3.0, 3.0)};
        const double v = expectation(problem, qaoa, params, ideal, 0);
        CHECK(v >= -1e-12);
        CHECK(v <= problem.total_weight() + 1e-12);
    }
}

TEST_CASE("trajectory mean tightens like one over sqrt(trajectories)") {
    const auto problem = random_regular_graph(6, 3, 20);
    AnsatzConfig qaoa{AnsatzKind::QAOA, 1};
    std::vector<double> params = {0.35, 0.6};
    NoiseModel lo, hi;
    lo.p1q = hi.p1q = 0.01;
    lo.p2q = hi.p2q = 0.02;
    lo.trajectories = 40;
    hi.trajectories = 160;  // 4x trajectories -> half the standard error

    auto stddev_over_seeds = [&](const NoiseModel& nm) {
        const int reps = 48;
        double sum = 0.0, sumsq = 0.0;
        for (int s = 0; s < reps; ++s) {
            const double v = expectation(problem, qaoa, params, nm, 5000 + s);
            sum += v;
            sumsq += v * v;
        }
        const double mean = sum / reps;
        return std::sqrt(sumsq / reps - mean * mean);
    };

    const double ratio = stddev_over_seeds(lo) / stddev_over_seeds(hi);
    CHECK(ratio > 1.3);
    CHECK(ratio < 3.0);
}

TEST_CASE("sampled shots approach the exact expectation") {
    const auto problem = random_regular_graph(6, 3, 21);
    AnsatzConfig qaoa{AnsatzKind::QAOA, 1};
    std::vector<double> params = {0.25, 0.5};
    NoiseModel exact;
    NoiseModel sampled;
    sampled.shots = 8192;
    const double a = expectation(problem, qaoa, params, exact, 31);
    const double b = expectation(problem, qaoa, params, sampled, 31);
    CHECK(std::fabs(a - b) < 0.3);  // | C | <= 9, sigma ~ 9 / (2 sqrt(8192)) ~ 0.05
}

TEST_CASE("parameter count mismatches are rejected") {
    const auto problem = single_edge();
    AnsatzConfig qaoa{AnsatzKind::QAOA, 2};
    std::vector<double> params = {0.1, 0.2};  // needs 4
    CHECK_THROWS_AS(expectation(problem, qaoa, params, NoiseModel{}, 0), std::invalid_argument);
}

TEST_CASE("two-local ansatz has n (layers+1) parameters and runs") {
    ProblemInstance p = random_regular_graph(4, 3, 40);
    AnsatzConfig two{AnsatzKind::TwoLocal, 2};
    CHECK(two.parameter_count(4) == 12);
    std::vector<double> params(12, 0.3);
    const double v = expectation(p, two, params, NoiseModel{}, 0);
    CHECK(std::isfinite(v));
    // all-zero angles leave |0...0>, which cuts nothing
    std::vector<double> zeros(12, 0.0);
    CHECK(expectation(p, two, zeros, NoiseModel{}, 0) == doctest::Approx(0.0));
}

TEST_CASE("landscape generation is deterministic and matches pointwise evaluation") {
    const auto problem = random_regular_graph(4, 3, 50);
    AnsatzConfig qaoa{AnsatzKind::QAOA, 1};
    GridSpec spec({{"beta0", -0.5, 0.5, 6}, {"gamma0", -1.0, 1.0, 9}});
    NoiseModel noisy;
    noisy.p1q = 0.005;
    noisy.p2q = 0.01;
    noisy.trajectories = 20;

    auto a = generate_landscape(problem, qaoa, spec, noisy, 77, 1);
    auto b = generate_landscape(problem, qaoa, spec, noisy, 77, 3);  // threaded
    CHECK(a.values == b.values);

    const std::vector<double> pt = spec.point_at(17);
    CHECK(a.values[17] == expectation(problem, qaoa, pt, noisy, derive_seed(77, 17)));
}

TEST_CASE("2-qubit landscape max matches a dense oracle scan") {
    const auto problem = single_edge();
    AnsatzConfig qaoa{AnsatzKind::QAOA, 1};
    const GridSpec spec = paper_p1_grid();
    auto l = generate_landscape(problem, qaoa, spec, NoiseModel{}, 0);

    double best = -1.0, oracle_best = -1.0;
    for (std::size_t i = 0; i < spec.total_points(); ++i) {
        const auto p = spec.point_at(i);
        oracle_best = std::max(oracle_best, oracle_qaoa_p1(problem, p[0], p[1]));
        best = std::max(best, l.values[i]);
    }
    CHECK(best == doctest::Approx(oracle_best).epsilon(1e-11));
}

TEST_CASE("constant-zero-weight graph gives a constant-zero landscape") {
    ProblemInstance p;
    p.n_qubits = 3;
    p.kind = ProblemKind::MaxCut;
    p.edges = {{0, 1, 0.0}, {1, 2, 0.0}};
    AnsatzConfig qaoa{AnsatzKind::QAOA, 1};
    GridSpec spec({{"beta0", -0.5, 0.5, 5}, {"gamma0", -1.0, 1.0, 5}});
    auto l = generate_landscape(p, qaoa, spec, NoiseModel{}, 3);
    for (double v : l.values) {
        CHECK(v == doctest::Approx(0.0));
    }
}

TEST_CASE("n=4 3-regular graph is K4") {
    const auto p = random_regular_graph(4, 3, 123);
    REQUIRE(p.edges.size() == 6);
    int degree[4] = {0, 0, 0, 0};
    for (const auto& e : p.edges) {
        ++degree[e.i];
        ++degree[e.j];
    }
    for (int d : degree) {
        CHECK(d == 3);
    }
}

TEST_CASE("n=6 3-regular graphs have degree 3 everywhere and are seeded") {
    for (std::uint64_t seed : {1ULL, 2ULL, 3ULL}) {
        const auto p = random_regular_graph(6, 3, seed);
        CHECK(p.edges.size() == 9);
        std::vector<int> degree(6, 0);
        for (const auto& e : p.edges) {
            ++degree[e.i];
            ++degree[e.j];
        }
        for (int d : degree) {
            CHECK(d == 3);
        }
        const auto q = random_regular_graph(6, 3, seed);
        CHECK(p.edges.size() == q.edges.size());
        for (std::size_t i = 0; i < p.edges.size(); ++i) {
            CHECK(p.edges[i].i == q.edges[i].i);
            CHECK(p.edges[i].j == q.edges[i].j);
        }
    }
    CHECK_THROWS_AS(random_regular_graph(5, 3, 1), std::invalid_argument);  // odd n * degree
}

TEST_CASE("SK instances couple every pair with +-1") {
    const auto p = random_sk(4, 77);
    REQUIRE(p.edges.size() == 6);
    bool saw_minus = false;
    for (const auto& e : p.edges) {
        CHECK((e.weight == 1.0 || e.weight == -1.0));
        saw_minus |= e.weight == -1.0;
    }
    // enumerate pairs: every (i, j), i < j, appears exactly once
    std::set<std::pair<int, int>> pairs;
    for (const auto& e : p.edges) {
        pairs.insert({e.i, e.j});
    }
    CHECK(pairs.size() == 6);
    (void)saw_minus;

    const auto g = random_sk(4, 78, true);
    bool nonunit = false;
    for (const auto& e : g.edges) {
        nonunit |= std::fabs(std::fabs(e.weight) - 1.0) > 1e-9;
    }
    CHECK(nonunit);  // gaussian couplings are not stuck at +-1
}

TEST_CASE("problem JSON round-trips") {
    const auto p = random_sk(5, 13);
    const auto q = problem_from_json(problem_to_json(p));
    CHECK(q.n_qubits == p.n_qubits);
    CHECK(q.kind == p.kind);
    CHECK(q.id == p.id);
    REQUIRE(q.edges.size() == p.edges.size());
    for (std::size_t i = 0; i < p.edges.size(); ++i) {
        CHECK(q.edges[i].weight == p.edges[i].weight);
    }
}

TEST_CASE("qubit cap is enforced") {
    ProblemInstance p;
    p.n_qubits = 25;
    p.edges = {{0, 1, 1.0}};
    AnsatzConfig qaoa{AnsatzKind::QAOA, 1};
    std::vector<double> params = {0.0, 0.0};
    CHECK_THROWS_AS(expectation(p, qaoa, params, NoiseModel{}, 0), std::invalid_argument);
}
