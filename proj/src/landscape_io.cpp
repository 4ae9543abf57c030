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

#include "oscar/landscape_io.hpp"

#include <cmath>
#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace oscar {

namespace {

constexpr char kMagic[6] = {'O', 'S', 'C', 'A', 'R', '\0'};

void put_u32(std::ostream& os, std::uint32_t v) {
    char b[4];
    for (int i = 0; i < 4; ++i) {
        b[i] = static_cast<char>((v >> (8 * i)) & 0xff);
    }
    os.write(b, 4);
}

void put_u64(std::ostream& os, std::uint64_t v) {
    char b[8];
    for (int i = 0; i < 8; ++i) {
        b[i] = static_cast<char>((v >> (8 * i)) & 0xff);
    }
    os.write(b, 8);
}

void put_f64(std::ostream& os, double v) {
    std::uint64_t bits;
    std::memcpy(&bits, &v, 8);
    put_u64(os, bits);
}

std::uint32_t get_u32(std::istream& is) {
    unsigned char b[4];
    is.read(reinterpret_cast<char*>(b), 4);
    if (!is) {
        throw std::runtime_error("landscape file truncated");
    }
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) {
        v |= static_cast<std::uint32_t>(b[i]) << (8 * i);
    }
    return v;
}

std::uint64_t get_u64(std::istream& is) {
    unsigned char b[8];
    is.read(reinterpret_cast<char*>(b), 8);
    if (!is) {
        throw std::runtime_error("landscape file truncated");
    }
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) {
        v |= static_cast<std::uint64_t>(b[i]) << (8 * i);
    }
    return v;
}

double get_f64(std::istream& is) {
    const std::uint64_t bits = get_u64(is);
    double v;
    std::memcpy(&v, &bits, 8);
    return v;
}

}  // namespace

void save_landscape(const Landscape& landscape, const std::string& path) {
    landscape.validate();

    nlohmann::json header;
    header["version"] = kLandscapeFormatVersion;
    nlohmann::json dims = nlohmann::json::array();
    for (const auto& d : landscape.spec.dims()) {
        dims.push_back({{"name", d.name}, {"lo", d.lo}, {"hi", d.hi}, {"count", d.count}});
    }
    header["spec"] = {{"dims", dims}};
    header["meta"] = landscape.meta;
    const std::string header_str = header.dump();

    std::ofstream os(path, std::ios::binary);
    if (!os) {
        throw std::runtime_error("cannot open for writing: " + path);
    }
    os.write(kMagic, sizeof(kMagic));
    put_u32(os, kLandscapeFormatVersion);
    put_u64(os, header_str.size());
    os.write(header_str.data(), static_cast<std::streamsize>(header_str.size()));
    for (double v : landscape.values) {
        put_f64(os, v);
    }
    if (!os) {
        throw std::runtime_error("write failed: " + path);
    }
}

Landscape load_landscape(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) {
        throw std::runtime_error("cannot open: " + path);
    }
    char magic[6];
    is.read(magic, sizeof(magic));
    if (!is || std::memcmp(magic, kMagic, sizeof(kMagic)) != 0) {
        throw std::runtime_error("not a landscape file (bad magic): " + path);
    }
    const std::uint32_t version = get_u32(is);
    if (version != kLandscapeFormatVersion) {
        throw std::runtime_error("unsupported landscape format version " + std::to_string(version));
    }
    const std::uint64_t header_len = get_u64(is);
    std::string header_str(header_len, '\0');
    is.read(header_str.data(), static_cast<std::streamsize>(header_len));
    if (!is) {
        throw std::runtime_error("landscape file truncated: " + path);
    }
    nlohmann::json header = nlohmann::json::parse(header_str, nullptr, false);
    if (header.is_discarded()) {
        throw std::runtime_error("corrupt landscape header: " + path);
    }

    std::vector<GridDim> dims;
    for (const auto& d : header.at("spec").at("dims")) {
        dims.push_back({d.at("name").get<std::string>(), d.at("lo").get<double>(), d.at("hi").get<double>(),
                        d.at("count").get<std::size_t>()});
    }
    GridSpec spec(dims);

    std::vector<double> values(spec.total_points());
    for (double& v : values) {
        v = get_f64(is);
        if (!std::isfinite(v)) {
            throw std::runtime_error("landscape file contains non-finite value: " + path);
        }
    }
    return make_landscape(std::move(spec), std::move(values), header.at("meta"));
}

void export_csv(const Landscape& landscape, const std::string& path) {
    if (landscape.spec.rank() != 2) {
        throw std::invalid_argument("export_csv: only 2-D landscapes");
    }
    std::ofstream os(path);
    if (!os) {
        throw std::runtime_error("cannot open for writing: " + path);
    }
    const std::size_t n0 = landscape.spec.dims()[0].count;
    const std::size_t n1 = landscape.spec.dims()[1].count;
    os.precision(17);
    for (std::size_t r = 0; r < n0; ++r) {
        for (std::size_t c = 0; c < n1; ++c) {
            if (c) {
                os << ',';
            }
            os << landscape.values[r + n0 * c];
        }
        os << '\n';
    }
    if (!os) {
        throw std::runtime_error("write failed: " + path);
    }
}

Landscape import_csv(const std::string& path, const GridDim& dim0_range, const GridDim& dim1_range) {
    std::ifstream is(path);
    if (!is) {
        throw std::runtime_error("cannot open: " + path);
    }
    std::vector<std::vector<double>> rows;
    std::string line;
    bool first = true;
    while (std::getline(is, line)) {
        if (line.empty()) {
            continue;
        }
        std::vector<double> row;
        std::stringstream ss(line);
        std::string cell;
        bool numeric = true;
        while (std::getline(ss, cell, ',')) {
            try {
                std::size_t pos = 0;
                const double v = std::stod(cell, &pos);
                row.push_back(v);
            } catch (const std::exception&) {
                numeric = false;
                break;
            }
        }
        if (!numeric) {
            if (first) {
                first = false;
                continue;  // header line
            }
            throw std::runtime_error("import_csv: non-numeric cell in data row");
        }
        first = false;
        if (!rows.empty() && row.size() != rows.front().size()) {
            throw std::runtime_error("import_csv: ragged rows");
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty() || rows.front().empty()) {
        throw std::runtime_error("import_csv: no data");
    }

    const std::size_t n0 = rows.size();
    const std::size_t n1 = rows.front().size();
    GridSpec spec({
        {dim0_range.name, dim0_range.lo, dim0_range.hi, n0},
        {dim1_range.name, dim1_range.lo, dim1_range.hi, n1},
    });
    std::vector<double> values(n0 * n1);
    for (std::size_t r = 0; r < n0; ++r) {
        for (std::size_t c = 0; c < n1; ++c) {
            values[r + n0 * c] = rows[r][c];
        }
    }
    nlohmann::json meta;
    meta["source"] = "csv-import";
    return make_landscape(std::move(spec), std::move(values), std::move(meta));
}

}  // namespace oscar
