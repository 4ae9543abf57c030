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

#ifndef OSCAR_LANDSCAPE_IO_HPP
#define OSCAR_LANDSCAPE_IO_HPP

#include <string>

#include "oscar/landscape.hpp"

namespace oscar {

// .lsc layout: magic "OSCAR\0", u32 format version, u64 JSON header length,
// the JSON header (grid spec + meta), then the raw values as little-endian
// f64 in column-major order. Round-trips bit-exactly, metadata included.

inline constexpr std::uint32_t kLandscapeFormatVersion = 1;

void save_landscape(const Landscape& landscape, const std::string& path);
Landscape load_landscape(const std::string& path);

/// Plain-text grid exchange for externally produced landscapes (e.g. hardware
/// scans published as CSV). Rows are the first dimension, columns the second.
void export_csv(const Landscape& landscape, const std::string& path);

/// Parses a 2-D CSV grid. An optional leading header line is skipped when its
/// first field is not numeric. Axis ranges come from the caller; counts come
/// from the file.
Landscape import_csv(const std::string& path, const GridDim& dim0_range, const GridDim& dim1_range);

}  // namespace oscar

#endif
