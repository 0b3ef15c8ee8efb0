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
#include <functional>
#include <string_view>
#include <vector>

#include "chordlab/chord_diagram.hpp"
#include "chordlab/pending_chord.hpp"

namespace chordlab {

// Root share decomposition of a connected diagram with at least two chords.
// `first` is the first component (by first endpoint) left after deleting the
// root chord; `with_root` is everything else, root included. `interval`
// (1..2|first|-1) is where the root's right end falls among the endpoints
// of `first`.
struct RootShare {
  std::size_t interval = 0;
  ChordDiagram with_root;
  ChordDiagram first;
  friend bool operator==(const RootShare&, const RootShare&) = default;
};

RootShare root_share(const ChordDiagram& c);
ChordDiagram recombine(const RootShare& s);

// Connected diagrams with >= 2 chords onto indecomposable diagrams with
// exactly two components: `with_root` is dropped as one block into the
// interval of `first`. Labels travel with chords.
ChordDiagram phi(const ChordDiagram& c);
ChordDiagram phi_inv(const ChordDiagram& e);

// Rooted tree whose vertices are nonempty stacks of labelled nodes, with a
// diagram of at most two components over the children of each vertex. The
// structure's chords carry the children's top labels, and children are
// stored in structure chord order. Children always hang off the deepest
// node of a stack, so only one structure per vertex is needed.
struct ZTree {
  std::vector<Label> stack;
  ChordDiagram structure;
  std::vector<ZTree> children;

  std::size_t node_count() const;
  friend bool operator==(const ZTree&, const ZTree&) = default;
};

// Throws MalformedTreeError naming the first violated invariant.
void validate_ztree(const ZTree& z);

enum class ThetaCase {
  both_empty,  // pop
  right_only,  // children from the root component of the right dangler
  both,        // children from both root components, concatenated
  absorb,      // left root component is a single chord: grow the stack
  left_phi,    // children from the left root component, structure via phi
};

std::string_view theta_case_name(ThetaCase c);

struct ThetaStep {
  std::size_t iteration = 0;
  // Entries left in the queue after this step, new ones included.
  std::size_t queue_length = 0;
  ThetaCase which = ThetaCase::both_empty;
  Label label = 0;
};

using ThetaTrace = std::function<void(const ThetaStep&)>;

// Queue-driven construction of the Z-tree of a pending chord. Throws
// LabelError when labels are missing or collide.
ZTree theta(const PendingChord& p, const ThetaTrace& trace = {});
// Throws MalformedTreeError when the tree is not a theta image.
PendingChord theta_inv(const ZTree& z);

}  // namespace chordlab
