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
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "chordlab/rational.hpp"

namespace chordlab {

// Plain-text OEIS b-file: one "index value" pair per line, '#' comments.
struct BFile {
  std::vector<std::pair<long, BigInt>> terms;
};

// Throws ParseError on malformed lines or when no terms are present.
BFile parse_bfile(std::istream& in);
// Throws UsageError when the file cannot be opened.
BFile read_bfile(const std::string& path);

enum class OeisSequence { A000699, A000698, A088221 };

OeisSequence parse_sequence_id(std::string_view text);
std::string_view sequence_id_str(OeisSequence id);

struct OeisCheckResult {
  bool pass = false;
  std::size_t compared = 0;
  std::optional<long> first_mismatch;
  std::string detail;
};

// Compares the first `count` usable terms (all when count is 0) against
// the library: A000699 -> C, A000698 -> I, A088221 -> (1+C)^2. A000699's
// a(0) = 1 is a convention for the empty diagram, which C does not count,
// so index 0 is skipped for it. Throws ParseError if fewer terms exist.
OeisCheckResult oeis_check(OeisSequence id, const BFile& file, std::size_t count = 0);

}  // namespace chordlab
