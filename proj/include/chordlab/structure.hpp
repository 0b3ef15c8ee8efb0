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
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "chordlab/chord_diagram.hpp"

namespace chordlab {

// v1 < w1 < v2 < w2 or w1 < v1 < w2 < v2.
constexpr bool crosses(const Chord& a, const Chord& b) {
  return (a.left < b.left && b.left < a.right && a.right < b.right) ||
         (b.left < a.left && a.left < b.right && b.right < a.right);
}

// Predicates on raw 0-based partner arrays. The enumeration kernels call
// these directly without materializing ChordDiagram values.
namespace kernel {

// Number of connected components of the intersection graph.
int component_count(std::span<const int> partner);
// No proper prefix of positions is closed under partner. True for n = 0.
bool indecomposable(std::span<const int> partner);

}  // namespace kernel

struct IntersectionGraph {
  std::size_t vertex_count = 0;
  // Sorted pairs (i, j) with i < j.
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  bool adjacent(std::size_t i, std::size_t j) const;
};

IntersectionGraph intersection_graph(const ChordDiagram& d);

// Component id per chord; ids are numbered by first endpoint, so the root
// chord is always in component 0.
std::vector<std::size_t> component_ids(const ChordDiagram& d);
std::size_t component_count(const ChordDiagram& d);

// n >= 1 and the intersection graph is connected.
bool is_connected(const ChordDiagram& d);
bool is_indecomposable(const ChordDiagram& d);

// The chords at the given indices, relabelled order-preservingly to
// {1..2k}; labels travel with their chords.
ChordDiagram sub_diagram(const ChordDiagram& d, std::span<const std::size_t> chord_indices);

std::vector<ChordDiagram> connected_components(const ChordDiagram& d);

// Chord indices of the root component, ascending.
std::vector<std::size_t> root_component_chords(const ChordDiagram& d);
// Throws EmptyDiagramError on the empty diagram.
ChordDiagram root_component(const ChordDiagram& d);

// The diagrams sitting immediately right of the left and right endpoint of
// a root-component chord.
struct DanglingPair {
  ChordDiagram left;
  ChordDiagram right;
  friend bool operator==(const DanglingPair&, const DanglingPair&) = default;
};

// k indexes the chords of the root component in left-endpoint order.
// Throws NotRootComponentError when k is out of range.
DanglingPair dangling_pair(const ChordDiagram& d, std::size_t k);
// All pairs, in root-component chord order.
std::vector<DanglingPair> dangling_pairs(const ChordDiagram& d);

// Inverse of the root-component decomposition: grafts pairs[i] right of the
// endpoints of chord i of root.
ChordDiagram attach_dangling(const ChordDiagram& root, std::span<const DanglingPair> pairs);

// Side-by-side concatenation.
ChordDiagram concatenate(std::span<const ChordDiagram> parts);
// Unique maximal factorization into nonempty indecomposable blocks.
std::vector<ChordDiagram> concat_factorization(const ChordDiagram& d);

struct RootRemoval {
  std::vector<ChordDiagram> factors;
  // 1..2m interval of the last factor that held the root's right endpoint.
  std::size_t marked_interval = 0;
  std::optional<Label> root_label;
  friend bool operator==(const RootRemoval&, const RootRemoval&) = default;
};

// d must be indecomposable with at least two chords (DomainError).
RootRemoval root_removal_decomposition(const ChordDiagram& d);
// Inverse; throws DomainError when the factors or interval are invalid.
ChordDiagram root_insertion(const RootRemoval& r);

}  // namespace chordlab
