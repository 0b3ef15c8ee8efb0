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

#include "chordlab/chord_diagram.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <unordered_set>

#include "chordlab/errors.hpp"

namespace chordlab {

namespace {

void check_labels(std::span<const Label> labels, std::size_t n) {
  if (labels.empty()) return;
  if (labels.size() != n) {
    throw LabelError("expected " + std::to_string(n) + " labels, got " +
                     std::to_string(labels.size()));
  }
  std::unordered_set<Label> seen;
  for (Label l : labels) {
    if (l == 0) throw LabelError("labels must be positive");
    if (!seen.insert(l).second) throw LabelError("duplicate label " + std::to_string(l));
  }
}

}  // namespace

void ChordDiagram::index() {
  const std::size_t n = chords_.size();
  partner_.assign(2 * n, -1);
  owner_.assign(2 * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const auto [a, b] = chords_[i];
    partner_[a - 1] = b - 1;
    partner_[b - 1] = a - 1;
    owner_[a - 1] = i;
    owner_[b - 1] = i;
  }
}

ChordDiagram ChordDiagram::from_chords(std::vector<Chord> chords, std::vector<Label> labels) {
  const std::size_t n = chords.size();
  check_labels(labels, n);
  std::vector<char> used(2 * n + 1, 0);
  for (auto& c : chords) {
    if (c.left > c.right) std::swap(c.left, c.right);
    for (int p : {c.left, c.right}) {
      if (p < 1 || p > static_cast<int>(2 * n)) {
        throw DomainError("endpoint " + std::to_string(p) + " outside 1.." + std::to_string(2 * n));
      }
      if (used[p]) throw DomainError("endpoint " + std::to_string(p) + " used twice");
      used[p] = 1;
    }
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t i, std::size_t j) { return chords[i].left < chords[j].left; });
  ChordDiagram d;
  d.chords_.reserve(n);
  for (std::size_t i : order) d.chords_.push_back(chords[i]);
  if (!labels.empty()) {
    d.labels_.reserve(n);
    for (std::size_t i : order) d.labels_.push_back(labels[i]);
  }
  d.index();
  return d;
}

ChordDiagram ChordDiagram::from_word(std::span<const std::size_t> word,
                                     std::span<const Label> labels_by_id) {
  if (word.size() % 2 != 0) throw DomainError("chord word has odd length");
  const std::size_t max_id = word.empty() ? 0 : *std::max_element(word.begin(), word.end());
  std::vector<int> first(max_id + 1, 0);
  std::vector<Chord> chords;
  std::vector<Label> labels;
  chords.reserve(word.size() / 2);
  for (std::size_t pos = 0; pos < word.size(); ++pos) {
    const std::size_t id = word[pos];
    if (first[id] == 0) {
      first[id] = static_cast<int>(pos) + 1;
    } else if (first[id] > 0) {
      chords.push_back({first[id], static_cast<int>(pos) + 1});
      if (!labels_by_id.empty()) labels.push_back(labels_by_id[id]);
      first[id] = -1;
    } else {
      throw DomainError("chord id " + std::to_string(id) + " occurs more than twice");
    }
  }
  if (chords.size() * 2 != word.size()) throw DomainError("chord word has an unmatched endpoint");
  return from_chords(std::move(chords), std::move(labels));
}

ChordDiagram ChordDiagram::from_partners(std::span<const int> partner) {
  std::vector<Chord> chords;
  chords.reserve(partner.size() / 2);
  for (std::size_t p = 0; p < partner.size(); ++p) {
    if (partner[p] < 0 || static_cast<std::size_t>(partner[p]) >= partner.size() ||
        partner[partner[p]] != static_cast<int>(p) || partner[p] == static_cast<int>(p)) {
      throw DomainError("not a perfect matching");
    }
    if (partner[p] > static_cast<int>(p)) chords.push_back({static_cast<int>(p) + 1, partner[p] + 1});
  }
  return from_chords(std::move(chords));
}

ChordDiagram ChordDiagram::with_labels(std::vector<Label> labels) const {
  check_labels(labels, size());
  ChordDiagram d = *this;
  d.labels_ = std::move(labels);
  return d;
}

ChordDiagram ChordDiagram::without_labels() const {
  ChordDiagram d = *this;
  d.labels_.clear();
  return d;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

bool parse_int(std::string_view s, int& out) {
  if (s.empty()) return false;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

}  // namespace

ChordDiagram parse_diagram(std::string_view text) {
  text = trim(text);
  if (text.empty()) return ChordDiagram{};
  std::vector<Chord> chords;
  std::vector<std::string> tokens;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    const auto token = trim(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start));
    const auto dash = token.find('-');
    int a = 0;
    int b = 0;
    if (dash == std::string_view::npos || !parse_int(token.substr(0, dash), a) ||
        !parse_int(token.substr(dash + 1), b) || a < 1 || b < 1 || a == b) {
      throw ParseError("malformed chord token '" + std::string(token) + "'");
    }
    chords.push_back({std::min(a, b), std::max(a, b)});
    tokens.emplace_back(token);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  const int limit = static_cast<int>(2 * chords.size());
  std::vector<char> used(limit + 1, 0);
  for (std::size_t i = 0; i < chords.size(); ++i) {
    for (int p : {chords[i].left, chords[i].right}) {
      if (p > limit) {
        throw ParseError("endpoint out of range 1.." + std::to_string(limit) + " in token '" +
                         tokens[i] + "'");
      }
      if (used[p]) throw ParseError("duplicate endpoint in token '" + tokens[i] + "'");
      used[p] = 1;
    }
  }
  return ChordDiagram::from_chords(std::move(chords));
}

std::string format_diagram(const ChordDiagram& d) {
  std::string out;
  for (const auto& c : d.chords()) {
    if (!out.empty()) out += ',';
    out += std::to_string(c.left);
    out += '-';
    out += std::to_string(c.right);
  }
  return out;
}

ChordDiagram single_chord() { return ChordDiagram::from_chords({{1, 2}}); }

ChordDiagram single_chord(Label label) { return ChordDiagram::from_chords({{1, 2}}, {label}); }

}  // namespace chordlab
