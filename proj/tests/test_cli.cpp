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

// End-to-end checks against the built `oscar` binary (path via OSCAR_BIN).

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct CmdResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

const std::string& binary() {
    static const std::string bin = [] {
        const char* env = std::getenv("OSCAR_BIN");
        return std::string(env ? env : "./oscar");
    }();
    return bin;
}

const fs::path& workdir() {
    static const fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / ("oscar_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string path_of(const std::string& name) {
    return (workdir() / name).string();
}

CmdResult run_shell(const std::string& line) {
    const std::string err_file = path_of("stderr.txt");
    const std::string cmd = line + " 2>" + err_file;
    CmdResult result;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) {
        result.out.append(buf, n);
    }
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream is(err_file);
    result.err.assign(std::istreambuf_iterator<char>(is), std::istreambuf_iterator<char>());
    return result;
}

CmdResult run_cli(const std::string& args) {
    return run_shell(binary() + " " + args);
}

std::string file_bytes(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(is), std::istreambuf_iterator<char>());
}

}  // namespace

TEST_CASE("generate produces a 5000-point landscape with a manifest sibling") {
    const std::string out = path_of("gen.lsc");
    auto r = run_cli("generate --problem maxcut3 --qubits 8 --p 1 --grid paper-p1 --seed 7 -o " + out);
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(j.at("points") == 5000);
    CHECK(fs::exists(out));
    CHECK(fs::exists(out + ".manifest.json"));
    std::ifstream mf(out + ".manifest.json");
    const json manifest = json::parse(mf);
    CHECK(manifest.at("command") == "generate");
    CHECK(manifest.at("argv").size() >= 10);
}

TEST_CASE("generate is reproducible: same seed, same bytes") {
    const std::string a = path_of("rep_a.lsc"), b = path_of("rep_b.lsc");
    REQUIRE(run_cli("generate --problem maxcut3 --qubits 4 --p 1 --grid -0.5:0.5:8,-1:1:10 --seed 3 -o " + a).exit_code == 0);
    REQUIRE(run_cli("generate --problem maxcut3 --qubits 4 --p 1 --grid -0.5:0.5:8,-1:1:10 --seed 3 -o " + b).exit_code == 0);
    CHECK(file_bytes(a) == file_bytes(b));

    const std::string c = path_of("rep_c.lsc");
    REQUIRE(run_cli("generate --problem maxcut3 --qubits 4 --p 1 --grid -0.5:0.5:8,-1:1:10 --seed 4 -o " + c).exit_code == 0);
    CHECK(file_bytes(a) != file_bytes(c));
}

TEST_CASE("missing required flag exits 2 with usage text") {
    auto r = run_cli("generate --problem maxcut3 --qubits 8");
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("--out") != std::string::npos);
}

TEST_CASE("unknown flags are errors") {
    auto r = run_cli("metrics --in x.lsc --definitely-not-a-flag 3");
    CHECK(r.exit_code == 2);
}

TEST_CASE("help exists for every subcommand") {
    for (const std::string sub :
         {"generate", "sample", "reconstruct", "metrics", "sparsity", "zne", "ncm-train", "ncm-reconstruct",
          "optimize", "init", "dispatch", "import-csv", "export-csv"}) {
        auto r = run_cli(sub + " --help");
        CHECK(r.exit_code == 0);
        CHECK(r.out.find("Usage") != std::string::npos);
    }
}

TEST_CASE("full-sampling reconstruction reports nrmse below 1e-4") {
    const std::string gen = path_of("full.lsc"), rec = path_of("full_rec.lsc");
    REQUIRE(run_cli("generate --problem maxcut3 --qubits 4 --p 1 --grid -0.7:0.7:10,-1.5:1.5:12 --seed 5 -o " + gen).exit_code == 0);
    auto r = run_cli("reconstruct --in " + gen + " --fraction 1.0 --seed 1 --truth " + gen + " -o " + rec);
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(j.at("nrmse").get<double>() < 1e-4);
}

TEST_CASE("fraction 0 exits 2") {
    const std::string gen = path_of("full.lsc");
    auto r = run_cli("reconstruct --in " + gen + " --fraction 0 --seed 1 -o " + path_of("x.lsc"));
    CHECK(r.exit_code == 2);
}

TEST_CASE("sample feeds reconstruct through --measurements") {
    const std::string gen = path_of("meas_src.lsc");
    const std::string meas = path_of("meas.json");
    const std::string rec = path_of("meas_rec.lsc");
    REQUIRE(run_cli("generate --problem maxcut3 --qubits 4 --p 1 --grid -0.7:0.7:16,-1.5:1.5:20 --seed 6 -o " + gen).exit_code == 0);
    REQUIRE(run_cli("sample --in " + gen + " --fraction 0.3 --seed 2 -o " + meas).exit_code == 0);
    auto r = run_cli("reconstruct --in " + gen + " --measurements " + meas + " --truth " + gen + " -o " + rec);
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(j.at("samples") == 96);  // ceil(0.3 * 320)
    CHECK(j.at("nrmse").get<double>() < 0.5);
}

TEST_CASE("metrics emits the three-field JSON record") {
    const std::string gen = path_of("metrics_src.lsc");
    REQUIRE(run_cli("generate --problem maxcut3 --qubits 4 --p 1 --grid -0.7:0.7:8,-1.5:1.5:9 --seed 8 -o " + gen).exit_code == 0);
    auto r = run_cli("metrics --in " + gen);
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(j.contains("d2"));
    CHECK(j.contains("vog"));
    CHECK(j.contains("variance"));
    CHECK(j.at("variance").get<double>() > 0.0);
}

TEST_CASE("sparsity reports a small fraction for a QAOA landscape") {
    const std::string gen = path_of("gen.lsc");  // written by the first test
    if (!fs::exists(gen)) {
        REQUIRE(run_cli("generate --problem maxcut3 --qubits 8 --p 1 --grid paper-p1 --seed 7 -o " + gen).exit_code == 0);
    }
    auto r = run_cli("sparsity --in " + gen + " --energy 0.99");
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(j.at("fraction").get<double>() < 0.01);
    CHECK(j.at("total") == 5000);
}

TEST_CASE("zne writes a mitigated landscape") {
    const std::string out = path_of("zne.lsc");
    auto r = run_cli("zne --problem maxcut3 --qubits 4 --p 1 --grid -0.5:0.5:6,-1:1:8 --scales 1,3 "
                     "--extrapolation linear --p1q 0.002 --p2q 0.004 --trajectories 10 --seed 9 -o " + out);
    REQUIRE(r.exit_code == 0);
    CHECK(json::parse(r.out).at("queries_per_point") == 2);
    CHECK(fs::exists(out));
}

TEST_CASE("ncm-train then ncm-reconstruct runs end to end") {
    const std::string qpu1 = path_of("qpu1.lsc"), qpu2 = path_of("qpu2.lsc");
    const std::string model = path_of("ncm.json"), rec = path_of("ncm_rec.lsc");
    const std::string grid = "-0.7:0.7:16,-1.5:1.5:20";
    REQUIRE(run_cli("generate --problem maxcut3 --qubits 4 --p 1 --grid " + grid +
                    " --p1q 0.001 --p2q 0.005 --trajectories 30 --seed 10 -o " + qpu1).exit_code == 0);
    REQUIRE(run_cli("generate --problem maxcut3 --qubits 4 --p 1 --grid " + grid +
                    " --p1q 0.003 --p2q 0.007 --trajectories 30 --seed 10 -o " + qpu2).exit_code == 0);

    auto t = run_cli("ncm-train --src " + qpu2 + " --ref " + qpu1 + " --train-fraction 0.05 --seed 3 -o " + model);
    REQUIRE(t.exit_code == 0);
    CHECK(json::parse(t.out).contains("slope"));

    auto r = run_cli("ncm-reconstruct --ref-in " + qpu1 + " --other-in " + qpu2 +
                     " --fraction 0.3 --mix 0.5 --train-fraction 0.05 --seed 4 --truth " + qpu1 + " -o " + rec);
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(j.contains("nrmse"));
    CHECK(j.at("model").contains("slope"));
}

TEST_CASE("optimize runs on the interpolated landscape with zero QPU queries") {
    const std::string gen = path_of("opt_src.lsc");
    REQUIRE(run_cli("generate --problem maxcut3 --qubits 4 --p 1 --grid -0.7:0.7:16,-1.5:1.5:20 --seed 11 -o " + gen).exit_code == 0);
    auto r = run_cli("optimize --in " + gen + " --optimizer adam --init 0.1,0.2 --max-iters 200");
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(j.at("query_count") == 0);
    CHECK(j.at("evaluations").get<std::size_t>() > 0);
    CHECK(j.at("path").size() == j.at("values").size());
}

TEST_CASE("init reports the opt/recon query split") {
    auto r = run_cli("init --problem maxcut3 --qubits 4 --p 1 --grid -0.7:0.7:16,-1.5:1.5:20 "
                     "--fraction 0.2 --optimizer adam --seed 12 --compare-random");
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(j.contains("recon_queries"));
    CHECK(j.contains("opt_queries"));
    CHECK(j.at("total_queries") == j.at("recon_queries").get<std::size_t>() + j.at("opt_queries").get<std::size_t>());
    CHECK(j.contains("random_opt_queries"));
    CHECK(j.at("init_point").size() == 2);
}

TEST_CASE("dispatch reports completed and timed-out counts") {
    const std::string gen = path_of("disp_src.lsc"), rec = path_of("disp_rec.lsc");
    REQUIRE(run_cli("generate --problem maxcut3 --qubits 4 --p 1 --grid -0.7:0.7:16,-1.5:1.5:20 --seed 13 -o " + gen).exit_code == 0);
    auto r = run_cli("dispatch --in " + gen + " --fraction 0.3 --workers 4 --timeout 30 "
                     "--latency-base 1 --latency-sigma 1 --seed 14 -o " + rec);
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.out);
    const std::size_t completed = j.at("completed_indices").size();
    const std::size_t timed_out = j.at("timed_out_indices").size();
    CHECK(completed + timed_out == j.at("requested").get<std::size_t>());
    CHECK(j.at("per_worker_counts").size() == 4);
    CHECK(fs::exists(rec));
}

TEST_CASE("csv export/import round-trips the grid") {
    const std::string gen = path_of("csv_src.lsc");
    const std::string csv = path_of("grid.csv");
    const std::string back = path_of("csv_back.lsc");
    REQUIRE(run_cli("generate --problem maxcut3 --qubits 4 --p 1 --grid -0.7:0.7:10,-1.5:1.5:12 --seed 15 -o " + gen).exit_code == 0);
    REQUIRE(run_cli("export-csv --in " + gen + " -o " + csv).exit_code == 0);
    auto r = run_cli("import-csv --in " + csv + " --dim0 beta0:-0.7:0.7 --dim1 gamma0:-1.5:1.5 -o " + back);
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(j.at("shape") == json::array({10, 12}));
}

TEST_CASE("OSCAR_SEED environment variable is the seed fallback") {
    const std::string a = path_of("env_a.lsc"), b = path_of("env_b.lsc"), c = path_of("env_c.lsc");
    const std::string args = " generate --problem maxcut3 --qubits 4 --p 1 --grid -0.5:0.5:6,-1:1:8 -o ";
    REQUIRE(run_shell("OSCAR_SEED=21 " + binary() + args + a).exit_code == 0);
    REQUIRE(run_shell("OSCAR_SEED=21 " + binary() + args + b).exit_code == 0);
    REQUIRE(run_shell("OSCAR_SEED=22 " + binary() + args + c).exit_code == 0);
    CHECK(file_bytes(a) == file_bytes(b));
    CHECK(file_bytes(a) != file_bytes(c));
}

TEST_CASE("missing input file is a runtime error (exit 1)") {
    auto r = run_cli("metrics --in " + path_of("does_not_exist.lsc"));
    CHECK(r.exit_code == 1);
}
