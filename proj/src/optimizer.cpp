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

#include "oscar/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <stdexcept>

#include "oscar/rng.hpp"

namespace oscar {

nlohmann::json OptimizerRun::to_json() const {
    return {{"path", path},
            {"values", values},
            {"evaluations", evaluations},
            {"query_count", query_count},
            {"converged", converged}};
}

namespace {

double checked_eval(const ObjectiveFn& f, const std::vector<double>& x, std::size_t& evals) {
    const double v = f(x);
    ++evals;
    if (!std::isfinite(v)) {
        std::string where = "(";
        for (std::size_t i = 0; i < x.size(); ++i) {
            where += (i ? ", " : "") + std::to_string(x[i]);
        }
        throw std::runtime_error("objective returned non-finite value at " + where + ")");
    }
    return v;
}

}  // namespace

OptimizerRun adam(const ObjectiveFn& objective, const std::vector<double>& init, const AdamConfig& config) {
    if (init.empty()) {
        throw std::invalid_argument("adam: empty initial point");
    }
    const std::size_t d = init.size();
    OptimizerRun run;
    std::vector<double> x = init;
    std::vector<double> m(d, 0.0), v(d, 0.0), grad(d, 0.0);

    double fx = checked_eval(objective, x, run.evaluations);
    run.path.push_back(x);
    run.values.push_back(fx);

    for (std::size_t iter = 1; iter <= config.max_iters; ++iter) {
        std::vector<double> probe = x;
        for (std::size_t k = 0; k < d; ++k) {
            probe[k] = x[k] + config.fd_step;
            const double fp = checked_eval(objective, probe, run.evaluations);
            probe[k] = x[k] - config.fd_step;
            const double fm = checked_eval(objective, probe, run.evaluations);
            probe[k] = x[k];
            grad[k] = (fp - fm) / (2.0 * config.fd_step);
        }
        const double b1t = 1.0 - std::pow(config.beta1, static_cast<double>(iter));
        const double b2t = 1.0 - std::pow(config.beta2, static_cast<double>(iter));
        for (std::size_t k = 0; k < d; ++k) {
            m[k] = config.beta1 * m[k] + (1.0 - config.beta1) * grad[k];
            v[k] = config.beta2 * v[k] + (1.0 - config.beta2) * grad[k] * grad[k];
            const double m_hat = m[k] / b1t;
            const double v_hat = v[k] / b2t;
            x[k] -= config.lr * m_hat / (std::sqrt(v_hat) + config.eps);
        }
        const double fx_new = checked_eval(objective, x, run.evaluations);
        run.path.push_back(x);
        run.values.push_back(fx_new);
        if (std::fabs(fx_new - fx) < config.tol) {
            run.converged = true;
            fx = fx_new;
            break;
        }
        fx = fx_new;
    }
    run.query_count = config.counts_as_qpu ? run.evaluations : 0;
    return run;
}

OptimizerRun nelder_mead(const ObjectiveFn& objective, const std::vector<double>& init, const NelderMeadConfig& config) {
    if (init.empty()) {
        throw std::invalid_argument("nelder_mead: empty initial point");
    }
    const std::size_t d = init.size();

    std::vector<std::vector<double>> simplex(d + 1, init);
    for (std::size_t k = 0; k < d; ++k) {
        simplex[k + 1][k] += config.simplex_step;
    }
    for (std::size_t a = 0; a <= d; ++a) {
        for (std::size_t b = a + 1; b <= d; ++b) {
            if (simplex[a] == simplex[b]) {
                throw std::domain_error("nelder_mead: degenerate starting simplex (identical vertices)");
            }
        }
    }

    OptimizerRun run;
    std::vector<double> fv(d + 1);
    for (std::size_t i = 0; i <= d; ++i) {
        fv[i] = checked_eval(objective, simplex[i], run.evaluations);
    }

    std::vector<std::size_t> order(d + 1);
    auto sort_simplex = [&] {
        for (std::size_t i = 0; i <= d; ++i) {
            order[i] = i;
        }
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return fv[a] < fv[b]; });
    };
    sort_simplex();
    run.path.push_back(simplex[order[0]]);
    run.values.push_back(fv[order[0]]);

    // Standard coefficients: reflect 1, expand 2, contract 0.5, shrink 0.5.
    for (std::size_t iter = 0; iter < config.max_iters; ++iter) {
        const std::size_t best = order[0];
        const std::size_t worst = order[d];
        if (fv[worst] - fv[best] < config.tol) {
            run.converged = true;
            break;
        }

        std::vector<double> centroid(d, 0.0);
        for (std::size_t i = 0; i <= d; ++i) {
            if (i == worst) {
                continue;
            }
            for (std::size_t k = 0; k < d; ++k) {
                centroid[k] += simplex[i][k];
            }
        }
        for (std::size_t k = 0; k < d; ++k) {
            centroid[k] /= static_cast<double>(d);
        }

        auto blend = [&](double coef) {
            std::vector<double> p(d);
            for (std::size_t k = 0; k < d; ++k) {
                p[k] = centroid[k] + coef * (centroid[k] - simplex[worst][k]);
            }
            return p;
        };

        const std::vector<double> reflected = blend(1.0);
        const double fr = checked_eval(objective, reflected, run.evaluations);
        bool shrink = false;
        if (fr < fv[best]) {
            const std::vector<double> expanded = blend(2.0);
            const double fe = checked_eval(objective, expanded, run.evaluations);
            if (fe < fr) {
                simplex[worst] = expanded;
                fv[worst] = fe;
            } else {
                simplex[worst] = reflected;
                fv[worst] = fr;
            }
        } else if (fr < fv[order[d - 1]]) {
            simplex[worst] = reflected;
            fv[worst] = fr;
        } else if (fr < fv[worst]) {
            const std::vector<double> contracted = blend(0.5);  // outside
            const double fc = checked_eval(objective, contracted, run.evaluations);
            if (fc <= fr) {
                simplex[worst] = contracted;
                fv[worst] = fc;
            } else {
                shrink = true;
            }
        } else {
            const std::vector<double> contracted = blend(-0.5);  // inside
            const double fc = checked_eval(objective, contracted, run.evaluations);
            if (fc < fv[worst]) {
                simplex[worst] = contracted;
                fv[worst] = fc;
            } else {
                shrink = true;
            }
        }
        if (shrink) {
            for (std::size_t i = 0; i <= d; ++i) {
                if (i == best) {
                    continue;
                }
                for (std::size_t k = 0; k < d; ++k) {
                    simplex[i][k] = simplex[best][k] + 0.5 * (simplex[i][k] - simplex[best][k]);
                }
                fv[i] = checked_eval(objective, simplex[i], run.evaluations);
            }
        }
        sort_simplex();
        run.path.push_back(simplex[order[0]]);
        run.values.push_back(fv[order[0]]);
    }

    run.query_count = config.counts_as_qpu ? run.evaluations : 0;
    return run;
}

double endpoint_distance(const OptimizerRun& a, const OptimizerRun& b) {
    const auto& pa = a.endpoint();
    const auto& pb = b.endpoint();
    if (pa.size() != pb.size()) {
        throw std::invalid_argument("endpoint_distance: dimension mismatch");
    }
    double sq = 0.0;
    for (std::size_t k = 0; k < pa.size(); ++k) {
        const double d = pa[k] - pb[k];
        sq += d * d;
    }
    return std::sqrt(sq);
}

ObjectiveFn live_objective(const ProblemInstance& problem, const AnsatzConfig& ansatz, const NoiseModel& noise,
                           std::uint64_t seed) {
    auto counter = std::make_shared<std::uint64_t>(0);
    return [=](const std::vector<double>& params) {
        return -expectation(problem, ansatz, params, noise, derive_seed(seed, (*counter)++));
    };
}

ObjectiveFn interp_objective(const BicubicInterpolator& interp) {
    // capture by value: the interpolator is a self-contained table
    return [interp](const std::vector<double>& params) { return -interp.eval(params); };
}

OscarInitResult oscar_init(const ProblemInstance& problem, const AnsatzConfig& ansatz, const GridSpec& spec,
                           const NoiseModel& noise, const OscarInitConfig& config) {
    if (spec.rank() != 2) {
        throw std::invalid_argument("oscar_init: 2-D grid required");
    }
    if (spec.rank() != ansatz.parameter_count(problem.n_qubits)) {
        throw std::invalid_argument("oscar_init: grid rank must equal ansatz parameter count");
    }

    // Sampling phase: the only circuit runs charged to reconstruction. Values
    // use the same per-index streams as generate_landscape, so a sampled
    // point equals the corresponding full-landscape entry.
    const std::vector<std::size_t> indices = sample_uniform(spec, config.sampling_fraction, config.sample_seed);
    MeasurementSet meas;
    meas.indices = indices;
    meas.grid_shape = spec.shape();
    meas.values.reserve(indices.size());
    for (std::size_t idx : indices) {
        const std::vector<double> p = spec.point_at(idx);
        meas.values.push_back(expectation(problem, ansatz, p, noise, derive_seed(config.noise_seed, idx)));
    }

    const ReconstructionResult recon = reconstruct(meas, config.solver);
    Landscape recon_landscape = make_landscape(spec, recon.values, nlohmann::json::object());
    const BicubicInterpolator interp(recon_landscape);

    // Start the free (interpolated) optimization at the best reconstructed
    // grid point; the optimizer minimizes -<C>.
    std::size_t best_idx = 0;
    for (std::size_t i = 1; i < recon.values.size(); ++i) {
        if (recon.values[i] > recon.values[best_idx]) {
            best_idx = i;
        }
    }
    const std::vector<double> start = spec.point_at(best_idx);

    OscarInitResult result;
    const ObjectiveFn free_obj = interp_objective(interp);
    if (config.optimizer == OptimizerKind::Adam) {
        AdamConfig interp_cfg = config.adam;
        interp_cfg.counts_as_qpu = false;
        result.interp_run = adam(free_obj, start, interp_cfg);
    } else {
        NelderMeadConfig interp_cfg = config.nelder_mead;
        interp_cfg.counts_as_qpu = false;
        result.interp_run = nelder_mead(free_obj, start, interp_cfg);
    }
    result.init_point = result.interp_run.endpoint();
    result.recon_queries = indices.size();

    const ObjectiveFn live = live_objective(problem, ansatz, noise, config.noise_seed);
    if (config.optimizer == OptimizerKind::Adam) {
        AdamConfig live_cfg = config.adam;
        live_cfg.counts_as_qpu = true;
        result.live_run = adam(live, result.init_point, live_cfg);
    } else {
        NelderMeadConfig live_cfg = config.nelder_mead;
        live_cfg.counts_as_qpu = true;
        result.live_run = nelder_mead(live, result.init_point, live_cfg);
    }
    return result;
}

}  // namespace oscar
