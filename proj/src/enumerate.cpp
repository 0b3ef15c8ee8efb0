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

#include "chordlab/enumerate.hpp"

#include <array>
#include <string>
#include <utility>

#include "chordlab/errors.hpp"
#include "chordlab/structure.hpp"

namespace chordlab {

namespace {

constexpr std::array<std::pair<DiagramClass, std::string_view>, 6> kClassNames{{
    {DiagramClass::all, "all"},
    {DiagramClass::connected, "connected"},
    {DiagramClass::connectedNoSingle, "connectedNoSingle"},
    {DiagramClass::indecomposable, "indecomposable"},
    {DiagramClass::atMostTwoComponents, "atMostTwoComponents"},
    {DiagramClass::indecomposableTwoComponents, "indecomposableTwoComponents"},
}};

std::uint64_t count_rooted_at(DiagramClass cls, std::size_t n, std::size_t q) {
  std::uint64_t count = 0;
  for_each_matching_rooted_at(n, q, [&](std::span<const int> p) {
    if (in_class(cls, p)) ++count;
  });
  return count;
}

}  // namespace

std::string_view class_name(DiagramClass cls) {
  for (const auto& [c, s] : kClassNames) {
    if (c == cls) return s;
  }
  return "?";
}

DiagramClass parse_class(std::string_view text) {
  for (const auto& [c, s] : kClassNames) {
    if (s == text) return c;
  }
  throw UsageError("unknown diagram class '" + std::string(text) + "'");
}

const std::vector<DiagramClass>& all_classes() {
  static const std::vector<DiagramClass> classes = [] {
    std::vector<DiagramClass> out;
    for (const auto& entry : kClassNames) out.push_back(entry.first);
    return out;
  }();
  return classes;
}

bool in_class(DiagramClass cls, std::span<const int> partner) {
  const std::size_t n = partner.size() / 2;
  switch (cls) {
    case DiagramClass::all:
      return true;
    case DiagramClass::connected:
      return n >= 1 && kernel::component_count(partner) == 1;
    case DiagramClass::connectedNoSingle:
      return n >= 2 && kernel::component_count(partner) == 1;
    case DiagramClass::indecomposable:
      return kernel::indecomposable(partner);
    case DiagramClass::atMostTwoComponents:
      return kernel::component_count(partner) <= 2;
    case DiagramClass::indecomposableTwoComponents:
      return kernel::indecomposable(partner) && kernel::component_count(partner) == 2;
  }
  return false;
}

bool in_class(DiagramClass cls, const ChordDiagram& d) { return in_class(cls, d.partners()); }

std::vector<ChordDiagram> list_class(DiagramClass cls, std::size_t n) {
  std::vector<ChordDiagram> out;
  for_each_in_class(cls, n, [&](ChordDiagram d) { out.push_back(std::move(d)); });
  return out;
}

std::uint64_t count_class(DiagramClass cls, std::size_t n) {
  std::uint64_t count = 0;
  for_each_matching(n, [&](std::span<const int> p) {
    if (in_class(cls, p)) ++count;
  });
  return count;
}

std::uint64_t count_class_parallel(DiagramClass cls, std::size_t n) {
  if (n == 0) return in_class(cls, std::span<const int>()) ? 1 : 0;
  const long parts = static_cast<long>(2 * n - 1);
  std::uint64_t total = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : total)
  for (long q = 1; q <= parts; ++q) total += count_rooted_at(cls, n, static_cast<std::size_t>(q));
  return total;
}

std::uint64_t count_pending(std::size_t n) {
  std::uint64_t count = 0;
  for_each_pending(n, [&](const PendingChord&) { ++count; });
  return count;
}

}  // namespace chordlab
