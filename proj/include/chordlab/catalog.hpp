// Copyright 2026 The chordlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "chordlab/power_series.hpp"

namespace chordlab {

// Generating functions of the diagram classes, by chord count.
enum class SeriesName {
  D,     // all chord diagrams
  C,     // connected
  I0,    // nonempty indecomposable
  I,     // indecomposable, empty included
  I2,    // indecomposable with exactly two components
  Dle2,  // at most two components
  A,     // (1 + C)^2
  Z,     // Z-trees, x D^2
};

std::string_view series_name_str(SeriesName name);
// Throws UsageError on an unknown name.
SeriesName parse_series_name(std::string_view text);
const std::vector<SeriesName>& all_series_names();

PowerSeries catalog_series(SeriesName name, std::size_t order);

// Connected counts C_1..C_n from C_n = sum_{i<n} (2i-1) C_i C_{n-i}.
// Index 0 holds C_0 = 0.
std::vector<BigInt> connected_counts(std::size_t n);

// C obtained the other way round: revert y = x D^2 and read C(y) = D - 1.
PowerSeries connected_series_by_reversion(std::size_t order);

}  // namespace chordlab
