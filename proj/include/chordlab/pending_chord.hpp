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

#include "chordlab/chord_diagram.hpp"

namespace chordlab {

// A marked chord with its ordered pair of dangling diagrams: an element of
// X * (D * D). Every chord of the object carries a distinct label.
struct PendingChord {
  Label label = 0;
  ChordDiagram left;
  ChordDiagram right;

  std::size_t size() const { return 1 + left.size() + right.size(); }
  friend bool operator==(const PendingChord&, const PendingChord&) = default;
};

}  // namespace chordlab
