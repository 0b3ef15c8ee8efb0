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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace chordlab {

using Label = std::uint32_t;

// Endpoints are 1-based positions in the linear representation.
struct Chord {
  int left = 0;
  int right = 0;
  friend auto operator<=>(const Chord&, const Chord&) = default;
};

// A rooted chord diagram: a perfect matching of {1..2n}. Chords are kept
// sorted by left endpoint, so chord 0 is always the root chord. Labels are
// optional; when present there is one per chord and they are distinct.
class ChordDiagram {
 public:
  ChordDiagram() = default;

  // Chords may come in any order; labels follow their chords through the
  // sort. Throws DomainError on a malformed matching, LabelError on bad labels.
  static ChordDiagram from_chords(std::vector<Chord> chords, std::vector<Label> labels = {});

  // Builds a diagram from a word in which every id occurs exactly twice; the
  // two occurrences become the endpoints of one chord. labels_by_id, when
  // nonempty, is indexed by id.
  static ChordDiagram from_word(std::span<const std::size_t> word,
                               std::span<const Label> labels_by_id = {});

  // 0-based partner array, partner[partner[p]] == p.
  static ChordDiagram from_partners(std::span<const int> partner);

  std::size_t size() const { return chords_.size(); }
  bool empty() const { return chords_.empty(); }
  std::span<const Chord> chords() const { return chords_; }
  const Chord& chord(std::size_t i) const { return chords_[i]; }

  bool has_labels() const { return !labels_.empty(); }
  std::span<const Label> labels() const { return labels_; }
  Label label(std::size_t i) const { return labels_.at(i); }

  // Index of the chord owning the 1-based endpoint position.
  std::size_t chord_at(int position) const { return owner_[position - 1]; }
  // The word of chord indices read left to right (length 2n).
  std::span<const std::size_t> word() const { return owner_; }
  // 0-based partner array.
  std::span<const int> partners() const { return partner_; }

  ChordDiagram with_labels(std::vector<Label> labels) const;
  ChordDiagram without_labels() const;

  friend bool operator==(const ChordDiagram& a, const ChordDiagram& b) {
    return a.chords_ == b.chords_ && a.labels_ == b.labels_;
  }
  friend std::strong_ordering operator<=>(const ChordDiagram& a, const ChordDiagram& b) {
    if (auto c = a.chords_ <=> b.chords_; c != 0) return c;
    return a.labels_ <=> b.labels_;
  }

 private:
  void index();

  std::vector<Chord> chords_;
  std::vector<Label> labels_;
  std::vector<int> partner_;
  std::vector<std::size_t> owner_;
};

// Text format "a-b,c-d,..." sorted by left endpoint; "" is the empty diagram.
ChordDiagram parse_diagram(std::string_view text);
std::string format_diagram(const ChordDiagram& d);

// Single chord, optionally labelled.
ChordDiagram single_chord();
ChordDiagram single_chord(Label label);

}  // namespace chordlab
