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

#include "chordlab/oeis.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "chordlab/catalog.hpp"
#include "chordlab/errors.hpp"

namespace chordlab {

BFile parse_bfile(std::istream& in) {
  BFile out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    long index = 0;
    std::string value;
    std::string extra;
    if (!(fields >> index >> value) || (fields >> extra)) {
      throw ParseError("b-file line " + std::to_string(lineno) + ": expected 'index value'");
    }
    BigInt v;
    if (v.set_str(value, 10) != 0) {
      throw ParseError("b-file line " + std::to_string(lineno) + ": bad value '" + value + "'");
    }
    if (!out.terms.empty() && index != out.terms.back().first + 1) {
      throw ParseError("b-file line " + std::to_string(lineno) + ": indices must be consecutive");
    }
    out.terms.emplace_back(index, std::move(v));
  }
  if (out.terms.empty()) throw ParseError("b-file has no terms");
  return out;
}

BFile read_bfile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open b-file '" + path + "'");
  return parse_bfile(in);
}

OeisSequence parse_sequence_id(std::string_view text) {
  if (text == "A000699") return OeisSequence::A000699;
  if (text == "A000698") return OeisSequence::A000698;
  if (text == "A088221") return OeisSequence::A088221;
  throw UsageError("unsupported sequence '" + std::string(text) + "'");
}

std::string_view sequence_id_str(OeisSequence id) {
  switch (id) {
    case OeisSequence::A000699: return "A000699";
    case OeisSequence::A000698: return "A000698";
    case OeisSequence::A088221: return "A088221";
  }
  return "?";
}

OeisCheckResult oeis_check(OeisSequence id, const BFile& file, std::size_t count) {
  std::vector<std::pair<long, BigInt>> usable;
  for (const auto& t : file.terms) {
    if (t.first < 0) throw ParseError("negative index in b-file");
    if (id == OeisSequence::A000699 && t.first == 0) continue;
    usable.push_back(t);
  }
  if (count == 0) count = usable.size();
  if (usable.size() < count) {
    throw ParseError("b-file has " + std::to_string(usable.size()) + " usable terms, " +
                     std::to_string(count) + " requested");
  }
  usable.resize(count);
  const auto top = static_cast<std::size_t>(usable.back().first);
  const auto series = [&] {
    switch (id) {
      case OeisSequence::A000699: return catalog_series(SeriesName::C, top);
      case OeisSequence::A000698: return catalog_series(SeriesName::I, top);
      case OeisSequence::A088221: return catalog_series(SeriesName::A, top);
    }
    throw UsageError("unsupported sequence");
  }();
  OeisCheckResult result;
  result.pass = true;
  for (const auto& [index, value] : usable) {
    ++result.compared;
    const auto& computed = series[static_cast<std::size_t>(index)];
    if (computed != Rational(value)) {
      result.pass = false;
      result.first_mismatch = index;
      result.detail = "a(" + std::to_string(index) + "): b-file " + to_string(value) + ", computed " +
                      to_string(computed);
      return result;
    }
  }
  result.detail = std::to_string(result.compared) + " terms match";
  return result;
}

}  // namespace chordlab
