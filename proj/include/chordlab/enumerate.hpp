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

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "chordlab/chord_diagram.hpp"
#include "chordlab/pending_chord.hpp"

namespace chordlab {

enum class DiagramClass {
  all,                          // D
  connected,                    // C
  connectedNoSingle,            // C*
  indecomposable,               // I (empty diagram included)
  atMostTwoComponents,          // D_{<=2} (empty diagram included)
  indecomposableTwoComponents,  // I_2
};

std::string_view class_name(DiagramClass cls);
// Throws UsageError.
DiagramClass parse_class(std::string_view text);
const std::vector<DiagramClass>& all_classes();

bool in_class(DiagramClass cls, std::span<const int> partner);
bool in_class(DiagramClass cls, const ChordDiagram& d);

namespace detail {

template <class Visitor>
void extend_matching(std::vector<int>& partner, std::size_t from, Visitor& visit) {
  std::size_t i = from;
  while (i < partner.size() && partner[i] >= 0) ++i;
  if (i == partner.size()) {
    visit(std::span<const int>(partner));
    return;
  }
  for (std::size_t j = i + 1; j < partner.size(); ++j) {
    if (partner[j] >= 0) continue;
    partner[i] = static_cast<int>(j);
    partner[j] = static_cast<int>(i);
    extend_matching(partner, i + 1, visit);
    partner[i] = partner[j] = -1;
  }
}

}  // namespace detail

// Visits every 0-based partner array of {0..2n-1} whose position 0 is
// matched with root_partner, in lexicographic order of canonical form.
template <class Visitor>
void for_each_matching_rooted_at(std::size_t n, std::size_t root_partner, Visitor&& visit) {
  std::vector<int> partner(2 * n, -1);
  partner[0] = static_cast<int>(root_partner);
  partner[root_partner] = 0;
  detail::extend_matching(partner, 1, visit);
}

// All (2n-1)!! matchings in lexicographic order. The span is only valid
// during the call.
template <class Visitor>
void for_each_matching(std::size_t n, Visitor&& visit) {
  if (n == 0) {
    visit(std::span<const int>());
    return;
  }
  for (std::size_t q = 1; q < 2 * n; ++q) for_each_matching_rooted_at(n, q, visit);
}

template <class F>
void for_each_diagram(std::size_t n, F&& f) {
  for_each_matching(n, [&](std::span<const int> p) { f(ChordDiagram::from_partners(p)); });
}

template <class F>
void for_each_in_class(DiagramClass cls, std::size_t n, F&& f) {
  for_each_matching(n, [&](std::span<const int> p) {
    if (in_class(cls, p)) f(ChordDiagram::from_partners(p));
  });
}

std::vector<ChordDiagram> list_class(DiagramClass cls, std::size_t n);

// Serial reference count, one stream.
std::uint64_t count_class(DiagramClass cls, std::size_t n);
// Same count, with the matching space split by the root chord's partner
// across OpenMP threads.
std::uint64_t count_class_parallel(DiagramClass cls, std::size_t n);

// Every labelled marked chord with dangling pair of total size n, labels
// drawn from {1..n}: n! * [x^n] x D^2 objects.
template <class F>
void for_each_pending(std::size_t n, F&& f) {
  if (n == 0) return;
  std::vector<std::vector<ChordDiagram>> by_size(n);
  for (std::size_t k = 0; k < n; ++k) by_size[k] = list_class(DiagramClass::all, k);
  for (std::size_t l = 0; l < n; ++l) {
    const std::size_t r = n - 1 - l;
    for (const auto& dl : by_size[l]) {
      for (const auto& dr : by_size[r]) {
        std::vector<Label> perm(n);
        std::iota(perm.begin(), perm.end(), Label{1});
        do {
          PendingChord p;
          p.label = perm[0];
          p.left = l ? dl.with_labels({perm.begin() + 1, perm.begin() + 1 + l}) : dl;
          p.right = r ? dr.with_labels({perm.begin() + 1 + l, perm.end()}) : dr;
          f(std::as_const(p));
        } while (std::next_permutation(perm.begin(), perm.end()));
      }
    }
  }
}

std::uint64_t count_pending(std::size_t n);

}  // namespace chordlab
