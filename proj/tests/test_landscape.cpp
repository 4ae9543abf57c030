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

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <vector>

#include "oscar/landscape.hpp"
#include "oscar/landscape_io.hpp"
#include "oscar/rng.hpp"

using namespace oscar;

namespace {

Landscape line_landscape(const std::vector<double>& values) {
    GridSpec spec({{"x", 0.0, 1.0, values.size()}});
    return make_landscape(spec, values, nlohmann::json::object());
}

Landscape random_landscape(std::size_t n0, std::size_t n1, std::uint64_t seed) {
    GridSpec spec({{"a", -1.0, 1.0, n0}, {"b", 0.0, 2.0, n1}});
    Rng rng(seed);
    std::vector<double> v(n0 * n1);
    for (double& x : v) {
        x = rng.uniform(-5.0, 5.0);
    }
    nlohmann::json meta;
    meta["seed"] = seed;
    return make_landscape(spec, v, meta);
}

std::string temp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / name).string();
}

}  // namespace

TEST_CASE("nrmse of a landscape with itself is zero") {
    auto l = random_landscape(6, 7, 1);
    CHECK(nrmse(l, l) == 0.0);
}

TEST_CASE("nrmse hand example: unit offset over [0..4] gives 0.5") {
    auto truth = line_landscape({0, 1, 2, 3, 4});
    auto recon = line_landscape({1, 2, 3, 4, 5});
    // RMSE = 1; linear-interpolation quartiles Q1 = 1, Q3 = 3
    CHECK(nrmse(truth, recon) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("constant truth raises a distinct error") {
    auto truth = line_landscape({2, 2, 2, 2});
    auto recon = line_landscape({2, 2, 2, 3});
    CHECK_THROWS_AS(nrmse(truth, recon), std::domain_error);
}

TEST_CASE("nrmse is invariant under shared shift and scale") {
    auto truth = random_landscape(8, 9, 2);
    auto recon = random_landscape(8, 9, 3);
    const double base = nrmse(truth, recon);

    auto shift = [&](const Landscape& l, double c, double scale) {
        Landscape out = l;
        for (double& v : out.values) {
            v = scale * v + c;
        }
        return out;
    };
    CHECK(nrmse(shift(truth, 4.2, 1.0), shift(recon, 4.2, 1.0)) == doctest::Approx(base).epsilon(1e-9));
    CHECK(nrmse(shift(truth, 0.0, 3.5), shift(recon, 0.0, 3.5)) == doctest::Approx(base).epsilon(1e-9));
}

TEST_CASE("nrmse requires identical grid specs") {
    auto a = random_landscape(6, 7, 1);
    auto b = random_landscape(7, 6, 1);
    CHECK_THROWS_AS(nrmse(a, b), std::invalid_argument);
}

TEST_CASE("metrics of a constant landscape are all zero") {
    GridSpec spec({{"a", 0.0, 1.0, 5}, {"b", 0.0, 1.0, 4}});
    auto l = make_landscape(spec, std::vector<double>(20, 3.0), nlohmann::json::object());
    auto m = metrics(l);
    CHECK(m.d2 == 0.0);
    CHECK(m.vog == 0.0);
    CHECK(m.variance == 0.0);
}

TEST_CASE("metrics hand examples on 1-D lines") {
    auto linear = metrics(line_landscape({0, 1, 2, 3}));
    CHECK(linear.d2 == 0.0);
    CHECK(linear.vog == 0.0);
    CHECK(linear.variance == doctest::Approx(1.25));  // population variance

    auto zigzag = metrics(line_landscape({0, 1, 0, 1}));
    // second differences at i = 2, 3: -2 and 2, so ((-2)^2 + 2^2) / 4 = 2
    CHECK(zigzag.d2 == doctest::Approx(2.0));
}

TEST_CASE("metrics are invariant under adding a constant") {
    auto l = random_landscape(6, 8, 9);
    auto shifted = l;
    for (double& v : shifted.values) {
        v += 11.5;
    }
    auto a = metrics(l);
    auto b = metrics(shifted);
    CHECK(a.d2 == doctest::Approx(b.d2).epsilon(1e-9));
    CHECK(a.vog == doctest::Approx(b.vog).epsilon(1e-9));
    CHECK(a.variance == doctest::Approx(b.variance).epsilon(1e-9));
}

TEST_CASE("metrics reject too-short axes") {
    GridSpec spec({{"a", 0.0, 1.0, 2}, {"b", 0.0, 1.0, 5}});
    auto l = make_landscape(spec, std::vector<double>(10, 0.0), nlohmann::json::object());
    CHECK_THROWS_AS(metrics(l), std::invalid_argument);
}

TEST_CASE("reshape pairs (a,a,b,b) into (a^2, b^2) and restores exactly") {
    GridSpec spec4({{"b0", 0.0, 1.0, 2}, {"b1", 0.0, 1.0, 2}, {"g0", 0.0, 1.0, 2}, {"g1", 0.0, 1.0, 2}});
    std::vector<double> v(16);
    for (std::size_t i = 0; i < 16; ++i) {
        v[i] = static_cast<double>(i);
    }
    auto l4 = make_landscape(spec4, v, nlohmann::json::object());
    auto l2 = reshape_to_2d(l4);
    CHECK(l2.spec.shape() == std::vector<std::size_t>{4, 4});
    CHECK(l2.values == v);  // flat layout untouched

    auto back = reshape_from_2d(l2);
    CHECK(back == l4);
}

TEST_CASE("reshape keeps the value multiset and the paper's p=2 shape") {
    GridSpec spec4 = paper_p2_grid();
    Rng rng(5);
    std::vector<double> v(spec4.total_points());
    double sum = 0.0;
    for (double& x : v) {
        x = rng.uniform(0.0, 1.0);
        sum += x;
    }
    auto l2 = reshape_to_2d(make_landscape(spec4, v, nlohmann::json::object()));
    CHECK(l2.spec.shape() == std::vector<std::size_t>{144, 225});
    double sum2 = 0.0;
    for (double x : l2.values) {
        sum2 += x;
    }
    CHECK(sum2 == doctest::Approx(sum).epsilon(1e-12));
    auto sorted_a = v;
    auto sorted_b = l2.values;
    std::sort(sorted_a.begin(), sorted_a.end());
    std::sort(sorted_b.begin(), sorted_b.end());
    CHECK(sorted_a == sorted_b);
}

TEST_CASE("reshape rejects wrong ranks") {
    auto l = random_landscape(4, 4, 17);
    CHECK_THROWS_AS(reshape_to_2d(l), std::invalid_argument);
    CHECK_THROWS_AS(reshape_from_2d(l), std::invalid_argument);
}

TEST_CASE("save/load round-trips bit-exactly, metadata included") {
    auto l = random_landscape(9, 5, 23);
    l.meta["noise"] = {{"p1q", 0.003}, {"p2q", 0.007}};
    l.meta["label"] = "round-trip";
    const std::string path = temp_path("oscar_test_roundtrip.lsc");
    save_landscape(l, path);
    auto back = load_landscape(path);
    CHECK(back == l);
    std::remove(path.c_str());
}

TEST_CASE("loading a file with wrong magic fails") {
    const std::string path = temp_path("oscar_test_badmagic.lsc");
    {
        std::ofstream os(path, std::ios::binary);
        os << "NOTALSCFILE....................";
    }
    CHECK_THROWS_AS(load_landscape(path), std::runtime_error);
    std::remove(path.c_str());
}

TEST_CASE("loading a truncated file fails") {
    auto l = random_landscape(9, 5, 29);
    const std::string path = temp_path("oscar_test_trunc.lsc");
    save_landscape(l, path);
    const auto full = std::filesystem::file_size(path);
    std::filesystem::resize_file(path, full - 11);
    CHECK_THROWS_AS(load_landscape(path), std::runtime_error);
    std::remove(path.c_str());
}

TEST_CASE("csv export re-imports to the same grid") {
    auto l = random_landscape(12, 8, 31);
    const std::string path = temp_path("oscar_test_grid.csv");
    export_csv(l, path);
    auto back = import_csv(path, l.spec.dims()[0], l.spec.dims()[1]);
    CHECK(back.spec.shape() == l.spec.shape());
    for (std::size_t i = 0; i < l.values.size(); ++i) {
        CHECK(back.values[i] == l.values[i]);  // %.17g round-trips doubles
    }
    std::remove(path.c_str());
}

TEST_CASE("csv import skips a header line") {
    const std::string path = temp_path("oscar_test_header.csv");
    {
        std::ofstream os(path);
        os << "g0,g1,g2\n1,2,3\n4,5,6\n";
    }
    auto l = import_csv(path, {"a", 0.0, 1.0, 0}, {"b", 0.0, 1.0, 0});
    CHECK(l.spec.shape() == std::vector<std::size_t>{2, 3});
    CHECK(l.values[0 + 2 * 0] == 1.0);
    CHECK(l.values[1 + 2 * 2] == 6.0);
    std::remove(path.c_str());
}

TEST_CASE("non-finite values are rejected at construction") {
    GridSpec spec({{"a", 0.0, 1.0, 2}, {"b", 0.0, 1.0, 2}});
    std::vector<double> v = {1.0, 2.0, std::nan(""), 4.0};
    CHECK_THROWS_AS(make_landscape(spec, v, nlohmann::json::object()), std::invalid_argument);
}

TEST_CASE("measure_at gathers values at sorted indices") {
    auto l = random_landscape(5, 5, 37);
    auto meas = measure_at(l, {0, 7, 24});
    CHECK(meas.values == std::vector<double>{l.values[0], l.values[7], l.values[24]});
    CHECK(meas.grid_shape == l.spec.shape());
}
