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

#include "chordlab/structure.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <string>

#include "chordlab/errors.hpp"

namespace chordlab {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a < b) std::swap(a, b);
    parent_[a] = b;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

// Collects the labels of several parts laid out consecutively as ids.
// All nonempty parts labelled, or none.
std::vector<Label> combined_labels(std::span<const ChordDiagram* const> parts) {
  bool any_labelled = false;
  bool any_plain = false;
  for (const auto* p : parts) {
    if (p->empty()) continue;
    (p->has_labels() ? any_labelled : any_plain) = true;
  }
  if (any_labelled && any_plain) throw LabelError("cannot combine labelled and unlabelled diagrams");
  std::vector<Label> out;
  if (!any_labelled) return out;
  for (const auto* p : parts) out.insert(out.end(), p->labels().begin(), p->labels().end());
  return out;
}

}  // namespace

namespace kernel {

int component_count(std::span<const int> partner) {
  const std::size_t n = partner.size() / 2;
  if (n == 0) return 0;
  constexpr std::size_t kMax = 64;
  std::array<int, kMax> left_buf{};
  std::array<int, kMax> right_buf{};
  std::array<int, kMax> parent_buf{};
  std::vector<int> left_vec, right_vec, parent_vec;
  std::span<int> left(left_buf.data(), std::min(n, kMax));
  std::span<int> right(right_buf.data(), std::min(n, kMax));
  std::span<int> parent(parent_buf.data(), std::min(n, kMax));
  if (n > kMax) {
    left_vec.resize(n);
    right_vec.resize(n);
    parent_vec.resize(n);
    left = left_vec;
    right = right_vec;
    parent = parent_vec;
  }
  std::size_t k = 0;
  for (std::size_t p = 0; p < partner.size(); ++p) {
    if (partner[p] > static_cast<int>(p)) {
      left[k] = static_cast<int>(p);
      right[k] = partner[p];
      parent[k] = static_cast<int>(k);
      ++k;
    }
  }
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int components = static_cast<int>(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n && left[j] < right[i]; ++j) {
      if (right[i] < right[j]) {
        const int a = find(static_cast<int>(i));
        const int b = find(static_cast<int>(j));
        if (a != b) {
          parent[std::max(a, b)] = std::min(a, b);
          --components;
        }
      }
    }
  }
  return components;
}

bool indecomposable(std::span<const int> partner) {
  int open = 0;
  for (std::size_t p = 0; p + 1 < partner.size(); ++p) {
    open += partner[p] > static_cast<int>(p) ? 1 : -1;
    if (open == 0) return false;
  }
  return true;
}

}  // namespace kernel

bool IntersectionGraph::adjacent(std::size_t i, std::size_t j) const {
  if (i > j) std::swap(i, j);
  return std::binary_search(edges.begin(), edges.end(), std::pair{i, j});
}

IntersectionGraph intersection_graph(const ChordDiagram& d) {
  IntersectionGraph g;
  g.vertex_count = d.size();
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      if (crosses(d.chord(i), d.chord(j))) g.edges.emplace_back(i, j);
    }
  }
  return g;
}

std::vector<std::size_t> component_ids(const ChordDiagram& d) {
  const std::size_t n = d.size();
  UnionFind uf(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (crosses(d.chord(i), d.chord(j))) uf.unite(i, j);
    }
  }
  // Chord indices follow left endpoints, so the first chord met of each
  // component fixes its rank.
  std::vector<std::size_t> rank(n, n);
  std::vector<std::size_t> ids(n);
  std::size_t next = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto r = uf.find(i);
    if (rank[r] == n) rank[r] = next++;
    ids[i] = rank[r];
  }
  return ids;
}

std::size_t component_count(const ChordDiagram& d) {
  return static_cast<std::size_t>(kernel::component_count(d.partners()));
}

bool is_connected(const ChordDiagram& d) { return !d.empty() && component_count(d) == 1; }

bool is_indecomposable(const ChordDiagram& d) { return kernel::indecomposable(d.partners()); }

ChordDiagram sub_diagram(const ChordDiagram& d, std::span<const std::size_t> chord_indices) {
  std::vector<char> keep(d.size(), 0);
  for (auto i : chord_indices) keep.at(i) = 1;
  std::vector<std::size_t> word;
  word.reserve(2 * chord_indices.size());
  for (auto id : d.word()) {
    if (keep[id]) word.push_back(id);
  }
  return ChordDiagram::from_word(word, d.labels());
}

std::vector<ChordDiagram> connected_components(const ChordDiagram& d) {
  const auto ids = component_ids(d);
  const std::size_t count = ids.empty() ? 0 : *std::max_element(ids.begin(), ids.end()) + 1;
  std::vector<std::vector<std::size_t>> members(count);
  for (std::size_t i = 0; i < ids.size(); ++i) members[ids[i]].push_back(i);
  std::vector<ChordDiagram> out;
  out.reserve(count);
  for (const auto& m : members) out.push_back(sub_diagram(d, m));
  return out;
}

std::vector<std::size_t> root_component_chords(const ChordDiagram& d) {
  if (d.empty()) throw EmptyDiagramError("the empty diagram has no root component");
  const auto ids = component_ids(d);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (ids[i] == 0) out.push_back(i);
  }
  return out;
}

ChordDiagram root_component(const ChordDiagram& d) {
  const auto chords = root_component_chords(d);
  return sub_diagram(d, chords);
}

std::vector<DanglingPair> dangling_pairs(const ChordDiagram& d) {
  const auto root = root_component_chords(d);
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> rank(d.size(), kNone);
  for (std::size_t k = 0; k < root.size(); ++k) rank[root[k]] = k;

  // Gap g = 2k (left endpoint of root chord k) or 2k + 1 (right endpoint).
  std::vector<std::vector<std::size_t>> gaps(2 * root.size());
  std::vector<std::size_t> gap_of(d.size(), kNone);
  std::size_t current = kNone;
  for (int pos = 1; pos <= static_cast<int>(2 * d.size()); ++pos) {
    const auto c = d.chord_at(pos);
    if (rank[c] != kNone) {
      current = 2 * rank[c] + (d.chord(c).left == pos ? 0 : 1);
      continue;
    }
    if (d.chord(c).left == pos) {
      gap_of[c] = current;
      gaps[current].push_back(c);
    } else if (gap_of[c] != current) {
      throw StructureError("chord " + std::to_string(c) + " spans two gaps of the root component");
    }
  }
  std::vector<DanglingPair> out;
  out.reserve(root.size());
  for (std::size_t k = 0; k < root.size(); ++k) {
    out.push_back({sub_diagram(d, gaps[2 * k]), sub_diagram(d, gaps[2 * k + 1])});
  }
  return out;
}

DanglingPair dangling_pair(const ChordDiagram& d, std::size_t k) {
  auto pairs = dangling_pairs(d);
  if (k >= pairs.size()) {
    throw NotRootComponentError("root component has " + std::to_string(pairs.size()) +
                                " chords, index " + std::to_string(k) + " requested");
  }
  return std::move(pairs[k]);
}

ChordDiagram attach_dangling(const ChordDiagram& root, std::span<const DanglingPair> pairs) {
  if (pairs.size() != root.size()) {
    throw DomainError("need one dangling pair per root-component chord");
  }
  std::vector<const ChordDiagram*> parts{&root};
  std::vector<std::size_t> offset;
  std::size_t next = root.size();
  for (const auto& p : pairs) {
    offset.push_back(next);
    parts.push_back(&p.left);
    next += p.left.size();
    offset.push_back(next);
    parts.push_back(&p.right);
    next += p.right.size();
  }
  const auto labels = combined_labels(parts);
  std::vector<std::size_t> word;
  word.reserve(2 * next);
  for (int pos = 1; pos <= static_cast<int>(2 * root.size()); ++pos) {
    const auto c = root.chord_at(pos);
    word.push_back(c);
    const bool is_left = root.chord(c).left == pos;
    const auto& block = is_left ? pairs[c].left : pairs[c].right;
    const auto base = offset[2 * c + (is_left ? 0 : 1)];
    for (auto id : block.word()) word.push_back(base + id);
  }
  return ChordDiagram::from_word(word, labels);
}

ChordDiagram concatenate(std::span<const ChordDiagram> parts) {
  std::vector<const ChordDiagram*> ptrs;
  for (const auto& p : parts) ptrs.push_back(&p);
  const auto labels = combined_labels(ptrs);
  std::vector<std::size_t> word;
  std::size_t base = 0;
  for (const auto& p : parts) {
    for (auto id : p.word()) word.push_back(base + id);
    base += p.size();
  }
  return ChordDiagram::from_word(word, labels);
}

std::vector<ChordDiagram> concat_factorization(const ChordDiagram& d) {
  std::vector<ChordDiagram> out;
  std::vector<std::size_t> block;
  int open = 0;
  for (int pos = 1; pos <= static_cast<int>(2 * d.size()); ++pos) {
    const auto c = d.chord_at(pos);
    if (d.chord(c).left == pos) {
      block.push_back(c);
      ++open;
    } else if (--open == 0) {
      out.push_back(sub_diagram(d, block));
      block.clear();
    }
  }
  return out;
}

RootRemoval root_removal_decomposition(const ChordDiagram& d) {
  if (d.size() < 2 || !is_indecomposable(d)) {
    throw DomainError("root removal needs an indecomposable diagram with at least two chords, got '" +
                      format_diagram(d) + "'");
  }
  std::vector<std::size_t> rest(d.size() - 1);
  std::iota(rest.begin(), rest.end(), 1);
  RootRemoval out;
  out.factors = concat_factorization(sub_diagram(d, rest));
  // In the reduced diagram the root's right end sits just after position
  // right - 2; express that relative to the last factor.
  const std::size_t before = static_cast<std::size_t>(d.chord(0).right) - 2;
  const std::size_t last_start = 2 * (d.size() - 1) - 2 * out.factors.back().size();
  if (before <= last_start) throw StructureError("root right end lies before the last factor");
  out.marked_interval = before - last_start;
  if (d.has_labels()) out.root_label = d.label(0);
  return out;
}

ChordDiagram root_insertion(const RootRemoval& r) {
  if (r.factors.empty()) throw DomainError("root insertion needs at least one factor");
  for (const auto& f : r.factors) {
    if (f.empty() || !is_indecomposable(f)) {
      throw DomainError("factor '" + format_diagram(f) + "' is not a nonempty indecomposable diagram");
    }
  }
  const auto& last = r.factors.back();
  if (r.marked_interval < 1 || r.marked_interval > 2 * last.size()) {
    throw DomainError("marked interval " + std::to_string(r.marked_interval) + " outside 1.." +
                      std::to_string(2 * last.size()));
  }
  const auto body = concatenate(r.factors);
  if (body.has_labels() != r.root_label.has_value()) {
    throw LabelError("root label must be given exactly when the factors are labelled");
  }
  const std::size_t root_id = body.size();
  const std::size_t cut = 2 * (body.size() - last.size()) + r.marked_interval;
  std::vector<std::size_t> word{root_id};
  for (std::size_t p = 0; p < body.word().size(); ++p) {
    word.push_back(body.word()[p]);
    if (p + 1 == cut) word.push_back(root_id);
  }
  std::vector<Label> labels;
  if (r.root_label) {
    labels.assign(body.labels().begin(), body.labels().end());
    labels.push_back(*r.root_label);
  }
  return ChordDiagram::from_word(word, labels);
}

}  // namespace chordlab
