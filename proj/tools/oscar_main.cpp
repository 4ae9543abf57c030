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

// Command-line front end. Machine-readable results go to stdout (JSON) or to
// files; progress and diagnostics go to stderr. Every output file gets a
// manifest sibling recording the exact invocation. Exit codes: 0 success,
// 1 runtime failure, 2 usage error.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "oscar/dct.hpp"
#include "oscar/dispatch.hpp"
#include "oscar/landscape.hpp"
#include "oscar/landscape_io.hpp"
#include "oscar/ncm.hpp"
#include "oscar/optimizer.hpp"
#include "oscar/rng.hpp"
#include "oscar/simulator.hpp"
#include "oscar/version.hpp"
#include "oscar/zne.hpp"

using namespace oscar;
using nlohmann::json;

namespace {

std::vector<std::string> g_argv;
std::chrono::steady_clock::time_point g_start;

std::uint64_t seed_or_env(std::optional<std::uint64_t> flag) {
    if (flag) {
        return *flag;
    }
    if (const char* env = std::getenv("OSCAR_SEED")) {
        return std::stoull(env);
    }
    return 0;
}

void write_manifest(const std::string& output_path, const std::string& command, const json& extra) {
    json m;
    m["tool"] = "oscar";
    m["version"] = kVersion;
    m["command"] = command;
    m["argv"] = g_argv;
    m["output"] = output_path;
    m["wall_time_s"] =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - g_start).count();
    for (auto it = extra.begin(); it != extra.end(); ++it) {
        m[it.key()] = it.value();
    }
    std::ofstream os(output_path + ".manifest.json");
    os << m.dump(2) << "\n";
}

void emit(const json& j) {
    std::cout << j.dump(2) << "\n";
}

std::vector<double> parse_double_list(const std::string& s) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        out.push_back(std::stod(tok));
    }
    return out;
}

// "name:lo:hi" for csv import axes
GridDim parse_axis_range(const std::string& s) {
    std::stringstream ss(s);
    std::string name, lo, hi;
    if (!std::getline(ss, name, ':') || !std::getline(ss, lo, ':') || !std::getline(ss, hi, ':')) {
        throw std::invalid_argument("axis range must look like name:lo:hi");
    }
    return GridDim{name, std::stod(lo), std::stod(hi), 0};
}

// --grid: a named preset or "lo:hi:count,lo:hi:count,...". Dimension names
// follow the ansatz convention (betas first, then gammas, for QAOA).
GridSpec parse_grid(const std::string& grid, const AnsatzConfig& ansatz, int n_qubits) {
    if (grid == "paper-p1") {
        return paper_p1_grid();
    }
    if (grid == "paper-p2") {
        return paper_p2_grid();
    }
    std::vector<GridDim> dims;
    std::stringstream ss(grid);
    std::string tok;
    std::size_t k = 0;
    const std::size_t expected = ansatz.parameter_count(n_qubits);
    while (std::getline(ss, tok, ',')) {
        std::stringstream ds(tok);
        std::string lo, hi, count;
        if (!std::getline(ds, lo, ':') || !std::getline(ds, hi, ':') || !std::getline(ds, count, ':')) {
            throw std::invalid_argument("grid dimension must look like lo:hi:count");
        }
        std::string name = "d" + std::to_string(k);
        if (ansatz.kind == AnsatzKind::QAOA && expected == 2 * static_cast<std::size_t>(ansatz.depth)) {
            const std::size_t p = static_cast<std::size_t>(ansatz.depth);
            name = k < p ? "beta" + std::to_string(k) : "gamma" + std::to_string(k - p);
        }
        dims.push_back({name, std::stod(lo), std::stod(hi), static_cast<std::size_t>(std::stoull(count))});
        ++k;
    }
    return GridSpec(dims);
}

struct ProblemFlags {
    std::string problem = "maxcut3";
    int qubits = 8;
    std::string problem_file;
    std::optional<std::uint64_t> instance_seed;
    bool gaussian_sk = false;

    void attach(CLI::App* cmd) {
        cmd->add_option("--problem", problem, "maxcut3 or sk")->check(CLI::IsMember({"maxcut3", "sk"}));
        cmd->add_option("--qubits", qubits, "problem size (2..20)");
        cmd->add_option("--problem-file", problem_file, "load the instance from JSON instead of generating it");
        cmd->add_option("--instance-seed", instance_seed, "instance generation seed (defaults to --seed)");
        cmd->add_flag("--gaussian-sk", gaussian_sk, "draw SK couplings from a standard normal");
    }

    ProblemInstance build(std::uint64_t fallback_seed) const {
        if (!problem_file.empty()) {
            std::ifstream is(problem_file);
            if (!is) {
                throw std::runtime_error("cannot open problem file: " + problem_file);
            }
            return problem_from_json(json::parse(is));
        }
        const std::uint64_t seed = instance_seed.value_or(fallback_seed);
        if (problem == "sk") {
            return random_sk(qubits, seed, gaussian_sk);
        }
        return random_regular_graph(qubits, 3, seed);
    }
};

struct NoiseFlags {
    double p1q = 0.0;
    double p2q = 0.0;
    std::size_t trajectories = 200;
    std::size_t shots = 0;

    void attach(CLI::App* cmd) {
        cmd->add_option("--p1q", p1q, "1-qubit depolarizing probability");
        cmd->add_option("--p2q", p2q, "2-qubit depolarizing probability");
        cmd->add_option("--trajectories", trajectories, "noise trajectories per point");
        cmd->add_option("--shots", shots, "measurement shots (0 = exact expectations)");
    }

    NoiseModel build() const {
        NoiseModel n;
        n.p1q = p1q;
        n.p2q = p2q;
        n.trajectories = trajectories;
        n.shots = shots;
        n.validate();
        return n;
    }
};

struct SolverFlags {
    std::optional<double> lambda;
    std::size_t max_iters = 5000;
    double tol = 1e-7;

    void attach(CLI::App* cmd) {
        cmd->add_option("--lambda", lambda, "l1 weight (default: 1e-6 * ||A^T y||_inf)");
        cmd->add_option("--max-iters", max_iters, "solver iteration cap");
        cmd->add_option("--tol", tol, "relative objective-change stopping threshold");
    }

    SolverConfig build() const {
        SolverConfig c;
        c.lambda = lambda;
        c.max_iters = max_iters;
        c.tolerance = tol;
        return c;
    }
};

MeasurementSet measurements_from_json_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) {
        throw std::runtime_error("cannot open measurements file: " + path);
    }
    const json j = json::parse(is);
    MeasurementSet meas;
    meas.grid_shape = j.at("grid_shape").get<std::vector<std::size_t>>();
    meas.indices = j.at("indices").get<std::vector<std::size_t>>();
    meas.values = j.at("values").get<std::vector<double>>();
    meas.validate();
    return meas;
}

int run_generate(const ProblemFlags& pf, const NoiseFlags& nf, const std::string& ansatz_name, int depth,
                 const std::string& grid, std::optional<std::uint64_t> seed_flag, unsigned threads,
                 const std::string& out, const std::string& save_problem) {
    const std::uint64_t seed = seed_or_env(seed_flag);
    AnsatzConfig ansatz{ansatz_name == "twolocal" ? AnsatzKind::TwoLocal : AnsatzKind::QAOA, depth};
    const ProblemInstance problem = pf.build(seed);
    const GridSpec spec = parse_grid(grid, ansatz, problem.n_qubits);
    const NoiseModel noise = nf.build();

    std::cerr << "generating " << spec.total_points() << " points for " << problem.id << "\n";
    Landscape l = generate_landscape(problem, ansatz, spec, noise, seed, threads);
    save_landscape(l, out);
    if (!save_problem.empty()) {
        std::ofstream os(save_problem);
        os << problem_to_json(problem).dump(2) << "\n";
        write_manifest(save_problem, "generate", {{"seed", seed}});
    }
    write_manifest(out, "generate", {{"seed", seed}, {"points", spec.total_points()}});
    emit({{"output", out}, {"points", spec.total_points()}, {"problem", problem.id}});
    return 0;
}

int run_sample(const std::string& in, double fraction, std::optional<std::uint64_t> seed_flag, const std::string& out) {
    const std::uint64_t seed = seed_or_env(seed_flag);
    const Landscape l = load_landscape(in);
    const auto indices = sample_uniform(l.spec, fraction, seed);
    const MeasurementSet meas = measure_at(l, indices);
    json j;
    j["grid_shape"] = meas.grid_shape;
    j["indices"] = meas.indices;
    j["values"] = meas.values;
    j["fraction"] = fraction;
    j["seed"] = seed;
    j["source"] = in;
    std::ofstream os(out);
    if (!os) {
        throw std::runtime_error("cannot open for writing: " + out);
    }
    os << j.dump(2) << "\n";
    write_manifest(out, "sample", {{"seed", seed}, {"samples", meas.indices.size()}});
    emit({{"output", out}, {"samples", meas.indices.size()}});
    return 0;
}

int run_reconstruct(const std::string& in, const std::string& measurements, double fraction,
                    std::optional<std::uint64_t> seed_flag, const SolverFlags& sf, const std::string& truth_path,
                    const std::string& out) {
    const std::uint64_t seed = seed_or_env(seed_flag);
    GridSpec spec;
    MeasurementSet meas;
    json meta;
    if (!measurements.empty()) {
        meas = measurements_from_json_file(measurements);
        if (in.empty()) {
            throw std::invalid_argument("--measurements also needs --in for the grid ranges");
        }
        const Landscape src = load_landscape(in);
        spec = src.spec;
        meta["measurements"] = measurements;
    } else {
        if (in.empty()) {
            throw std::invalid_argument("either --in with --fraction or --measurements is required");
        }
        const Landscape src = load_landscape(in);
        spec = src.spec;
        meas = measure_at(src, sample_uniform(src.spec, fraction, seed));
        meta["sampled_from"] = in;
        meta["fraction"] = fraction;
        meta["sample_seed"] = seed;
    }

    Landscape recon = reconstruct_landscape(spec, meas, sf.build(), meta);
    save_landscape(recon, out);
    write_manifest(out, "reconstruct", {{"seed", seed}, {"samples", meas.indices.size()}});

    json result;
    result["output"] = out;
    result["samples"] = meas.indices.size();
    result["converged"] = recon.meta.at("reconstruction").at("converged");
    result["iterations"] = recon.meta.at("reconstruction").at("iterations");
    result["residual_l2"] = recon.meta.at("reconstruction").at("residual_l2");
    result["lambda"] = recon.meta.at("reconstruction").at("lambda");
    if (!truth_path.empty()) {
        const Landscape truth = load_landscape(truth_path);
        result["nrmse"] = nrmse(truth, recon);
    }
    emit(result);
    return 0;
}

int run_metrics(const std::string& in) {
    const Landscape l = load_landscape(in);
    const LandscapeMetrics m = metrics(l);
    emit({{"d2", m.d2}, {"vog", m.vog}, {"variance", m.variance}});
    return 0;
}

int run_sparsity(const std::string& in, double energy) {
    const Landscape l = load_landscape(in);
    const double fraction = sparsity_fraction(l.values, l.spec.shape(), energy);
    emit({{"fraction", fraction},
          {"coefficients", static_cast<std::size_t>(std::llround(fraction * static_cast<double>(l.size())))},
          {"total", l.size()},
          {"energy", energy}});
    return 0;
}

int run_zne(const ProblemFlags& pf, const NoiseFlags& nf, int depth, const std::string& grid,
            const std::string& scales, const std::string& extrapolation, std::optional<std::uint64_t> seed_flag,
            unsigned threads, const std::string& out) {
    const std::uint64_t seed = seed_or_env(seed_flag);
    AnsatzConfig ansatz{AnsatzKind::QAOA, depth};
    const ProblemInstance problem = pf.build(seed);
    const GridSpec spec = parse_grid(grid, ansatz, problem.n_qubits);
    ZneConfig zne;
    zne.scale_factors = parse_double_list(scales);
    zne.extrapolation = extrapolation == "linear" ? Extrapolation::Linear : Extrapolation::Richardson;
    zne.validate();

    std::cerr << "mitigated landscape: " << spec.total_points() << " points x " << zne.scale_factors.size()
              << " scale factors\n";
    Landscape l = mitigated_landscape(problem, ansatz, spec, nf.build(), zne, seed, threads);
    save_landscape(l, out);
    write_manifest(out, "zne", {{"seed", seed}});
    emit({{"output", out}, {"queries_per_point", zne.scale_factors.size()}});
    return 0;
}

int run_ncm_train(const std::string& src, const std::string& ref, double train_fraction,
                  std::optional<std::uint64_t> seed_flag, const std::string& out) {
    const std::uint64_t seed = seed_or_env(seed_flag);
    const Landscape l_src = load_landscape(src);
    const Landscape l_ref = load_landscape(ref);
    if (!(l_src.spec == l_ref.spec)) {
        throw std::invalid_argument("ncm-train: source and reference landscapes use different grids");
    }
    const auto indices = sample_uniform(l_src.spec, train_fraction, seed);
    std::vector<double> vs, vr;
    for (std::size_t idx : indices) {
        vs.push_back(l_src.values[idx]);
        vr.push_back(l_ref.values[idx]);
    }
    const LinearNcm model = ncm_train(vs, vr);
    std::ofstream os(out);
    if (!os) {
        throw std::runtime_error("cannot open for writing: " + out);
    }
    os << model.to_json().dump(2) << "\n";
    write_manifest(out, "ncm-train", {{"seed", seed}, {"pairs", indices.size()}});
    emit(model.to_json());
    return 0;
}

int run_ncm_reconstruct(const std::string& ref_in, const std::string& other_in, double fraction, double mix,
                        double train_fraction, bool no_ncm, std::optional<std::uint64_t> seed_flag,
                        const SolverFlags& sf, const std::string& truth_path, const std::string& out) {
    const std::uint64_t seed = seed_or_env(seed_flag);
    const Landscape ref = load_landscape(ref_in);
    const Landscape other = load_landscape(other_in);
    if (!(ref.spec == other.spec)) {
        throw std::invalid_argument("ncm-reconstruct: landscapes use different grids");
    }
    if (mix < 0.0 || mix > 1.0) {
        throw std::invalid_argument("ncm-reconstruct: --mix must be in [0, 1]");
    }

    // Sample the union, then split it between the two sources by a seeded
    // permutation so the ref share is exactly ceil(mix * m).
    const auto sampled = sample_uniform(ref.spec, fraction, seed);
    std::vector<std::size_t> perm = sampled;
    Rng rng(derive_seed(seed, 0x5117));
    for (std::size_t i = 0; i + 1 < perm.size(); ++i) {
        const std::size_t j = i + static_cast<std::size_t>(rng.below(perm.size() - i));
        std::swap(perm[i], perm[j]);
    }
    const std::size_t ref_count = static_cast<std::size_t>(std::ceil(mix * static_cast<double>(perm.size())));
    std::vector<std::size_t> ref_idx(perm.begin(), perm.begin() + ref_count);
    std::vector<std::size_t> other_idx(perm.begin() + ref_count, perm.end());
    std::sort(ref_idx.begin(), ref_idx.end());
    std::sort(other_idx.begin(), other_idx.end());

    std::optional<LinearNcm> model;
    std::vector<std::size_t> train_idx;
    if (!no_ncm) {
        train_idx = sample_uniform(ref.spec, train_fraction, derive_seed(seed, 0x7eaf));
        std::vector<double> vs, vr;
        for (std::size_t idx : train_idx) {
            vs.push_back(other.values[idx]);
            vr.push_back(ref.values[idx]);
        }
        model = ncm_train(vs, vr);
        // training points were executed on the reference too; keep them
        ref_idx.insert(ref_idx.end(), train_idx.begin(), train_idx.end());
        std::sort(ref_idx.begin(), ref_idx.end());
        ref_idx.erase(std::unique(ref_idx.begin(), ref_idx.end()), ref_idx.end());
    }

    MeasurementSet ref_meas = ref_idx.empty() ? MeasurementSet{{}, {}, ref.spec.shape()} : measure_at(ref, ref_idx);
    MeasurementSet other_meas =
        other_idx.empty() ? MeasurementSet{{}, {}, other.spec.shape()} : measure_at(other, other_idx);

    Landscape recon = mixed_reconstruct(ref.spec, ref_meas, other_meas, model, sf.build());
    save_landscape(recon, out);
    write_manifest(out, "ncm-reconstruct", {{"seed", seed}, {"mix", mix}, {"ncm", !no_ncm}});

    json result;
    result["output"] = out;
    result["ref_samples"] = ref_meas.indices.size();
    result["other_samples"] = other_meas.indices.size();
    result["training_pairs"] = train_idx.size();
    if (model) {
        result["model"] = model->to_json();
    }
    if (!truth_path.empty()) {
        result["nrmse"] = nrmse(load_landscape(truth_path), recon);
    }
    emit(result);
    return 0;
}

int run_optimize(const std::string& in, const std::string& optimizer, const std::string& init_str,
                 std::optional<std::uint64_t> init_seed, double lr, std::size_t max_iters, double tol,
                 std::optional<double> fd_step, double simplex_step, const std::string& out) {
    const Landscape l = load_landscape(in);
    if (l.spec.rank() != 2) {
        throw std::invalid_argument("optimize: 2-D landscape required");
    }
    const BicubicInterpolator interp(l);

    std::vector<double> init;
    if (!init_str.empty()) {
        init = parse_double_list(init_str);
        if (init.size() != 2) {
            throw std::invalid_argument("optimize: --init needs two comma-separated values");
        }
    } else {
        Rng rng(seed_or_env(init_seed));
        for (const auto& d : l.spec.dims()) {
            init.push_back(rng.uniform(d.lo, d.hi));
        }
    }

    OptimizerRun run;
    if (optimizer == "adam") {
        AdamConfig cfg;
        cfg.lr = lr;
        cfg.max_iters = max_iters;
        cfg.tol = tol;
        cfg.fd_step = fd_step.value_or(0.5 * std::min(l.spec.spacing(0), l.spec.spacing(1)));
        cfg.counts_as_qpu = false;
        run = adam(interp_objective(interp), init, cfg);
    } else {
        NelderMeadConfig cfg;
        cfg.max_iters = max_iters;
        cfg.tol = tol;
        cfg.simplex_step = simplex_step;
        cfg.counts_as_qpu = false;
        run = nelder_mead(interp_objective(interp), init, cfg);
    }
    json j = run.to_json();
    j["init"] = init;
    j["optimizer"] = optimizer;
    if (!out.empty()) {
        std::ofstream os(out);
        os << j.dump(2) << "\n";
        write_manifest(out, "optimize", {{"optimizer", optimizer}});
    }
    emit(j);
    return 0;
}

int run_init(const ProblemFlags& pf, const NoiseFlags& nf, int depth, const std::string& grid, double fraction,
             const std::string& optimizer, std::optional<std::uint64_t> seed_flag, bool compare_random,
             const std::string& out) {
    const std::uint64_t seed = seed_or_env(seed_flag);
    AnsatzConfig ansatz{AnsatzKind::QAOA, depth};
    const ProblemInstance problem = pf.build(seed);
    const GridSpec spec = parse_grid(grid, ansatz, problem.n_qubits);
    const NoiseModel noise = nf.build();

    OscarInitConfig cfg;
    cfg.sampling_fraction = fraction;
    cfg.sample_seed = derive_seed(seed, 1);
    cfg.noise_seed = seed;
    cfg.optimizer = optimizer == "nelder-mead" ? OptimizerKind::NelderMead : OptimizerKind::Adam;
    cfg.adam.fd_step = 0.5 * std::min(spec.spacing(0), spec.spacing(1));

    const OscarInitResult r = oscar_init(problem, ansatz, spec, noise, cfg);
    json j;
    j["problem"] = problem.id;
    j["init_point"] = r.init_point;
    j["recon_queries"] = r.recon_queries;
    j["opt_queries"] = r.live_run.query_count;
    j["total_queries"] = r.recon_queries + r.live_run.query_count;
    j["converged"] = r.live_run.converged;
    j["endpoint"] = r.live_run.endpoint();
    j["best_value"] = -r.live_run.values.back();

    if (compare_random) {
        Rng rng(derive_seed(seed, 2));
        std::vector<double> random_init;
        for (const auto& d : spec.dims()) {
            random_init.push_back(rng.uniform(d.lo, d.hi));
        }
        OptimizerRun random_run;
        const ObjectiveFn live = live_objective(problem, ansatz, noise, derive_seed(seed, 3));
        if (cfg.optimizer == OptimizerKind::Adam) {
            random_run = adam(live, random_init, cfg.adam);
        } else {
            random_run = nelder_mead(live, random_init, cfg.nelder_mead);
        }
        j["random_init"] = random_init;
        j["random_opt_queries"] = random_run.query_count;
    }
    if (!out.empty()) {
        std::ofstream os(out);
        os << j.dump(2) << "\n";
        write_manifest(out, "init", {{"seed", seed}});
    }
    emit(j);
    return 0;
}

int run_dispatch(const std::string& in, double fraction, unsigned workers, std::optional<double> timeout,
                 double latency_base, double latency_mu, double latency_sigma, double latency_scale,
                 std::optional<std::uint64_t> seed_flag, std::optional<std::uint64_t> latency_seed,
                 const SolverFlags& sf, const std::string& out) {
    const std::uint64_t seed = seed_or_env(seed_flag);
    const Landscape l = load_landscape(in);
    const auto indices = sample_uniform(l.spec, fraction, seed);

    LatencyModel latency;
    latency.base = latency_base;
    latency.tail_mu = latency_mu;
    latency.tail_sigma = latency_sigma;
    latency.tail_scale = latency_scale;
    latency.seed = latency_seed.value_or(derive_seed(seed, 0x1a7));

    const JobEvaluator evaluator = [&l](std::size_t idx) { return l.values.at(idx); };
    const DispatchReport report = dispatch(indices, l.spec.shape(), evaluator, workers, latency, timeout);

    json j = report.to_json();
    j["requested"] = indices.size();
    if (!out.empty()) {
        Landscape recon = eager_reconstruct(l.spec, report, sf.build());
        save_landscape(recon, out);
        write_manifest(out, "dispatch", {{"seed", seed}, {"workers", workers}});
        j["output"] = out;
        j["nrmse_vs_source"] = nrmse(l, recon);
    }
    emit(j);
    return 0;
}

int run_import_csv(const std::string& in, const std::string& dim0, const std::string& dim1, const std::string& out) {
    const Landscape l = import_csv(in, parse_axis_range(dim0), parse_axis_range(dim1));
    save_landscape(l, out);
    write_manifest(out, "import-csv", {{"input", in}});
    emit({{"output", out}, {"shape", l.spec.shape()}});
    return 0;
}

int run_export_csv(const std::string& in, const std::string& out) {
    const Landscape l = load_landscape(in);
    export_csv(l, out);
    write_manifest(out, "export-csv", {{"input", in}});
    emit({{"output", out}});
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    g_start = std::chrono::steady_clock::now();
    for (int i = 0; i < argc; ++i) {
        g_argv.emplace_back(argv[i]);
    }

    CLI::App app{"OSCAR: compressed-sensing reconstruction and analysis of VQA cost landscapes"};
    app.require_subcommand(1);
    std::function<int()> action;

    // ---- generate ----------------------------------------------------------
    {
        auto* cmd = app.add_subcommand("generate", "simulate a dense cost landscape");
        auto pf = std::make_shared<ProblemFlags>();
        auto nf = std::make_shared<NoiseFlags>();
        pf->attach(cmd);
        nf->attach(cmd);
        auto ansatz = std::make_shared<std::string>("qaoa");
        auto depth = std::make_shared<int>(1);
        auto grid = std::make_shared<std::string>("paper-p1");
        auto seed = std::make_shared<std::optional<std::uint64_t>>();
        auto threads = std::make_shared<unsigned>(1);
        auto out = std::make_shared<std::string>();
        auto save_problem = std::make_shared<std::string>();
        cmd->add_option("--ansatz", *ansatz, "qaoa or twolocal")->check(CLI::IsMember({"qaoa", "twolocal"}));
        cmd->add_option("--p,--depth", *depth, "ansatz depth");
        cmd->add_option("--grid", *grid, "paper-p1, paper-p2 or lo:hi:count,...");
        cmd->add_option("--seed", *seed, "master seed (falls back to OSCAR_SEED)");
        cmd->add_option("--threads", *threads, "worker threads for grid evaluation");
        cmd->add_option("-o,--out", *out, "output .lsc path")->required();
        cmd->add_option("--save-problem", *save_problem, "also write the problem instance JSON");
        cmd->callback([=, &action] {
            action = [=] { return run_generate(*pf, *nf, *ansatz, *depth, *grid, *seed, *threads, *out, *save_problem); };
        });
    }

    // ---- sample -------------------------------------------------------------
    {
        auto* cmd = app.add_subcommand("sample", "draw uniform random measurement indices from a landscape");
        auto in = std::make_shared<std::string>();
        auto fraction = std::make_shared<double>(0.1);
        auto seed = std::make_shared<std::optional<std::uint64_t>>();
        auto out = std::make_shared<std::string>();
        cmd->add_option("--in", *in, "input .lsc")->required();
        cmd->add_option("--fraction", *fraction, "sampling fraction in (0, 1]");
        cmd->add_option("--seed", *seed, "sampling seed");
        cmd->add_option("-o,--out", *out, "output measurements JSON")->required();
        cmd->callback([=, &action] { action = [=] { return run_sample(*in, *fraction, *seed, *out); }; });
    }

    // ---- reconstruct --------------------------------------------------------
    {
        auto* cmd = app.add_subcommand("reconstruct", "compressed-sensing reconstruction from samples");
        auto in = std::make_shared<std::string>();
        auto measurements = std::make_shared<std::string>();
        auto fraction = std::make_shared<double>(0.1);
        auto seed = std::make_shared<std::optional<std::uint64_t>>();
        auto sf = std::make_shared<SolverFlags>();
        auto truth = std::make_shared<std::string>();
        auto out = std::make_shared<std::string>();
        cmd->add_option("--in", *in, "landscape to sample (also provides grid ranges)");
        cmd->add_option("--measurements", *measurements, "measurements JSON from `sample`");
        cmd->add_option("--fraction", *fraction, "sampling fraction in (0, 1]");
        cmd->add_option("--seed", *seed, "sampling seed");
        sf->attach(cmd);
        cmd->add_option("--truth", *truth, "reference landscape; adds an nrmse field to the report");
        cmd->add_option("-o,--out", *out, "output .lsc path")->required();
        cmd->callback([=, &action] {
            action = [=] { return run_reconstruct(*in, *measurements, *fraction, *seed, *sf, *truth, *out); };
        });
    }

    // ---- metrics / sparsity ---------------------------------------------------
    {
        auto* cmd = app.add_subcommand("metrics", "roughness/flatness metrics of a landscape");
        auto in = std::make_shared<std::string>();
        cmd->add_option("--in", *in, "input .lsc")->required();
        cmd->callback([=, &action] { action = [=] { return run_metrics(*in); }; });
    }
    {
        auto* cmd = app.add_subcommand("sparsity", "fraction of DCT coefficients holding the given energy");
        auto in = std::make_shared<std::string>();
        auto energy = std::make_shared<double>(0.99);
        cmd->add_option("--in", *in, "input .lsc")->required();
        cmd->add_option("--energy", *energy, "energy fraction in (0, 1]");
        cmd->callback([=, &action] { action = [=] { return run_sparsity(*in, *energy); }; });
    }

    // ---- zne ------------------------------------------------------------------
    {
        auto* cmd = app.add_subcommand("zne", "zero-noise-extrapolated landscape");
        auto pf = std::make_shared<ProblemFlags>();
        auto nf = std::make_shared<NoiseFlags>();
        pf->attach(cmd);
        nf->attach(cmd);
        auto depth = std::make_shared<int>(1);
        auto grid = std::make_shared<std::string>("paper-p1");
        auto scales = std::make_shared<std::string>("1,2,3");
        auto extrapolation = std::make_shared<std::string>("richardson");
        auto seed = std::make_shared<std::optional<std::uint64_t>>();
        auto threads = std::make_shared<unsigned>(1);
        auto out = std::make_shared<std::string>();
        cmd->add_option("--p,--depth", *depth, "QAOA depth");
        cmd->add_option("--grid", *grid, "paper-p1, paper-p2 or lo:hi:count,...");
        cmd->add_option("--scales", *scales, "comma-separated noise scale factors");
        cmd->add_option("--extrapolation", *extrapolation, "linear or richardson")
            ->check(CLI::IsMember({"linear", "richardson"}));
        cmd->add_option("--seed", *seed, "master seed");
        cmd->add_option("--threads", *threads, "worker threads");
        cmd->add_option("-o,--out", *out, "output .lsc path")->required();
        cmd->callback([=, &action] {
            action = [=] { return run_zne(*pf, *nf, *depth, *grid, *scales, *extrapolation, *seed, *threads, *out); };
        });
    }

    // ---- ncm-train / ncm-reconstruct -------------------------------------------
    {
        auto* cmd = app.add_subcommand("ncm-train", "fit the noise compensation model between two landscapes");
        auto src = std::make_shared<std::string>();
        auto ref = std::make_shared<std::string>();
        auto train_fraction = std::make_shared<double>(0.01);
        auto seed = std::make_shared<std::optional<std::uint64_t>>();
        auto out = std::make_shared<std::string>();
        cmd->add_option("--src", *src, "source landscape (.lsc)")->required();
        cmd->add_option("--ref", *ref, "reference landscape (.lsc)")->required();
        cmd->add_option("--train-fraction", *train_fraction, "fraction of grid points used as training pairs");
        cmd->add_option("--seed", *seed, "training-sample seed");
        cmd->add_option("-o,--out", *out, "output model JSON")->required();
        cmd->callback([=, &action] { action = [=] { return run_ncm_train(*src, *ref, *train_fraction, *seed, *out); }; });
    }
    {
        auto* cmd = app.add_subcommand("ncm-reconstruct", "reconstruct from a two-QPU sample mix");
        auto ref_in = std::make_shared<std::string>();
        auto other_in = std::make_shared<std::string>();
        auto fraction = std::make_shared<double>(0.1);
        auto mix = std::make_shared<double>(0.5);
        auto train_fraction = std::make_shared<double>(0.01);
        auto no_ncm = std::make_shared<bool>(false);
        auto seed = std::make_shared<std::optional<std::uint64_t>>();
        auto sf = std::make_shared<SolverFlags>();
        auto truth = std::make_shared<std::string>();
        auto out = std::make_shared<std::string>();
        cmd->add_option("--ref-in", *ref_in, "reference QPU landscape (.lsc)")->required();
        cmd->add_option("--other-in", *other_in, "second QPU landscape (.lsc)")->required();
        cmd->add_option("--fraction", *fraction, "total sampling fraction");
        cmd->add_option("--mix", *mix, "share of samples taken from the reference QPU");
        cmd->add_option("--train-fraction", *train_fraction, "NCM training fraction");
        cmd->add_flag("--no-ncm", *no_ncm, "merge without compensation");
        cmd->add_option("--seed", *seed, "sampling seed");
        sf->attach(cmd);
        cmd->add_option("--truth", *truth, "reference truth; adds an nrmse field");
        cmd->add_option("-o,--out", *out, "output .lsc path")->required();
        cmd->callback([=, &action] {
            action = [=] {
                return run_ncm_reconstruct(*ref_in, *other_in, *fraction, *mix, *train_fraction, *no_ncm, *seed, *sf,
                                           *truth, *out);
            };
        });
    }

    // ---- optimize / init -------------------------------------------------------
    {
        auto* cmd = app.add_subcommand("optimize", "run an optimizer on an interpolated landscape");
        auto in = std::make_shared<std::string>();
        auto optimizer = std::make_shared<std::string>("adam");
        auto init = std::make_shared<std::string>();
        auto init_seed = std::make_shared<std::optional<std::uint64_t>>();
        auto lr = std::make_shared<double>(0.01);
        auto max_iters = std::make_shared<std::size_t>(1000);
        auto tol = std::make_shared<double>(1e-6);
        auto fd_step = std::make_shared<std::optional<double>>();
        auto simplex_step = std::make_shared<double>(0.1);
        auto out = std::make_shared<std::string>();
        cmd->add_option("--in", *in, "input .lsc (2-D)")->required();
        cmd->add_option("--optimizer", *optimizer, "adam or nelder-mead")
            ->check(CLI::IsMember({"adam", "nelder-mead"}));
        cmd->add_option("--init", *init, "starting point as beta,gamma (default: random in the grid box)");
        cmd->add_option("--init-seed", *init_seed, "seed for the random starting point");
        cmd->add_option("--lr", *lr, "adam learning rate");
        cmd->add_option("--max-iters", *max_iters, "iteration cap");
        cmd->add_option("--tol", *tol, "value-change stopping tolerance");
        cmd->add_option("--fd-step", *fd_step, "finite-difference step (default: half the grid spacing)");
        cmd->add_option("--simplex-step", *simplex_step, "nelder-mead initial simplex offset");
        cmd->add_option("-o,--out", *out, "also write the run record to this JSON file");
        cmd->callback([=, &action] {
            action = [=] {
                return run_optimize(*in, *optimizer, *init, *init_seed, *lr, *max_iters, *tol, *fd_step, *simplex_step,
                                    *out);
            };
        });
    }
    {
        auto* cmd = app.add_subcommand("init", "pick an initial point from a reconstructed landscape, then optimize live");
        auto pf = std::make_shared<ProblemFlags>();
        auto nf = std::make_shared<NoiseFlags>();
        pf->attach(cmd);
        nf->attach(cmd);
        auto depth = std::make_shared<int>(1);
        auto grid = std::make_shared<std::string>("paper-p1");
        auto fraction = std::make_shared<double>(0.1);
        auto optimizer = std::make_shared<std::string>("adam");
        auto seed = std::make_shared<std::optional<std::uint64_t>>();
        auto compare_random = std::make_shared<bool>(false);
        auto out = std::make_shared<std::string>();
        cmd->add_option("--p,--depth", *depth, "QAOA depth (the grid must be 2-D, so p=1)");
        cmd->add_option("--grid", *grid, "paper-p1 or lo:hi:count,...");
        cmd->add_option("--fraction", *fraction, "reconstruction sampling fraction");
        cmd->add_option("--optimizer", *optimizer, "adam or nelder-mead")
            ->check(CLI::IsMember({"adam", "nelder-mead"}));
        cmd->add_option("--seed", *seed, "master seed");
        cmd->add_flag("--compare-random", *compare_random, "also run the optimizer from a random initial point");
        cmd->add_option("-o,--out", *out, "also write the report to this JSON file");
        cmd->callback([=, &action] {
            action = [=] {
                return run_init(*pf, *nf, *depth, *grid, *fraction, *optimizer, *seed, *compare_random, *out);
            };
        });
    }

    // ---- dispatch ---------------------------------------------------------------
    {
        auto* cmd = app.add_subcommand("dispatch", "simulate multi-worker sampling with latency and a soft timeout");
        auto in = std::make_shared<std::string>();
        auto fraction = std::make_shared<double>(0.1);
        auto workers = std::make_shared<unsigned>(4);
        auto timeout = std::make_shared<std::optional<double>>();
        auto latency_base = std::make_shared<double>(1.0);
        auto latency_mu = std::make_shared<double>(0.0);
        auto latency_sigma = std::make_shared<double>(1.0);
        auto latency_scale = std::make_shared<double>(1.0);
        auto seed = std::make_shared<std::optional<std::uint64_t>>();
        auto latency_seed = std::make_shared<std::optional<std::uint64_t>>();
        auto sf = std::make_shared<SolverFlags>();
        auto out = std::make_shared<std::string>();
        cmd->add_option("--in", *in, "landscape supplying sample values")->required();
        cmd->add_option("--fraction", *fraction, "sampling fraction");
        cmd->add_option("--workers", *workers, "simulated worker count");
        cmd->add_option("--timeout", *timeout, "soft timeout in virtual seconds");
        cmd->add_option("--latency-base", *latency_base, "base latency per job");
        cmd->add_option("--latency-mu", *latency_mu, "lognormal tail mu");
        cmd->add_option("--latency-sigma", *latency_sigma, "lognormal tail sigma");
        cmd->add_option("--latency-scale", *latency_scale, "tail multiplier (0 disables the tail)");
        cmd->add_option("--seed", *seed, "sampling seed");
        cmd->add_option("--latency-seed", *latency_seed, "latency seed (default derived from --seed)");
        sf->attach(cmd);
        cmd->add_option("-o,--out", *out, "eager-reconstruct the completed samples into this .lsc");
        cmd->callback([=, &action] {
            action = [=] {
                return run_dispatch(*in, *fraction, *workers, *timeout, *latency_base, *latency_mu, *latency_sigma,
                                    *latency_scale, *seed, *latency_seed, *sf, *out);
            };
        });
    }

    // ---- csv ----------------------------------------------------------------------
    {
        auto* cmd = app.add_subcommand("import-csv", "import an external 2-D grid (e.g. hardware scans)");
        auto in = std::make_shared<std::string>();
        auto dim0 = std::make_shared<std::string>();
        auto dim1 = std::make_shared<std::string>();
        auto out = std::make_shared<std::string>();
        cmd->add_option("--in", *in, "input CSV (rows = first dim)")->required();
        cmd->add_option("--dim0", *dim0, "first axis as name:lo:hi")->required();
        cmd->add_option("--dim1", *dim1, "second axis as name:lo:hi")->required();
        cmd->add_option("-o,--out", *out, "output .lsc path")->required();
        cmd->callback([=, &action] { action = [=] { return run_import_csv(*in, *dim0, *dim1, *out); }; });
    }
    {
        auto* cmd = app.add_subcommand("export-csv", "export a 2-D landscape as CSV");
        auto in = std::make_shared<std::string>();
        auto out = std::make_shared<std::string>();
        cmd->add_option("--in", *in, "input .lsc")->required();
        cmd->add_option("-o,--out", *out, "output CSV path")->required();
        cmd->callback([=, &action] { action = [=] { return run_export_csv(*in, *out); }; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        return action ? action() : 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
