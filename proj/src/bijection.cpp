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

#include "chordlab/bijection.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "chordlab/errors.hpp"
#include "chordlab/structure.hpp"

namespace chordlab {

namespace {

std::vector<Label> labels_of_parts(const ChordDiagram& a, const ChordDiagram& b) {
  if (!a.empty() && !b.empty() && a.has_labels() != b.has_labels()) {
    throw LabelError("cannot combine labelled and unlabelled diagrams");
  }
  std::vector<Label> out;
  if (!a.has_labels() && !b.has_labels()) return out;
  out.assign(a.labels().begin(), a.labels().end());
  out.insert(out.end(), b.labels().begin(), b.labels().end());
  return out;
}

}  // namespace

RootShare root_share(const ChordDiagram& c) {
  if (c.size() < 2 || !is_connected(c)) {
    throw DomainError("root share needs a connected diagram with at least two chords, got '" +
                      format_diagram(c) + "'");
  }
  std::vector<std::size_t> rest(c.size() - 1);
  std::iota(rest.begin(), rest.end(), 1);
  // sub_diagram keeps chord order, so chord i of the reduced diagram is
  // chord i + 1 of c.
  const auto ids = component_ids(sub_diagram(c, rest));
  std::vector<std::size_t> first;
  std::vector<std::size_t> with_root{0};
  for (std::size_t i = 0; i < ids.size(); ++i) (ids[i] == 0 ? first : with_root).push_back(i + 1);

  const int root_right = c.chord(0).right;
  std::size_t interval = 0;
  for (auto i : first) {
    interval += (c.chord(i).left < root_right) + (c.chord(i).right < root_right);
  }
  return {interval, sub_diagram(c, with_root), sub_diagram(c, first)};
}

ChordDiagram recombine(const RootShare& s) {
  const auto& c1 = s.with_root;
  const auto& c2 = s.first;
  if (!is_connected(c1) || !is_connected(c2) || s.interval < 1 || s.interval >= 2 * c2.size()) {
    throw DomainError("invalid root share triple");
  }
  const std::size_t base = c1.size();
  std::vector<std::size_t> word{c1.word()[0]};
  for (std::size_t p = 0; p < s.interval; ++p) word.push_back(base + c2.word()[p]);
  for (std::size_t p = 1; p < c1.word().size(); ++p) word.push_back(c1.word()[p]);
  for (std::size_t p = s.interval; p < c2.word().size(); ++p) word.push_back(base + c2.word()[p]);
  return ChordDiagram::from_word(word, labels_of_parts(c1, c2));
}

ChordDiagram phi(const ChordDiagram& c) {
  const auto s = root_share(c);
  const auto& c1 = s.with_root;
  const auto& c2 = s.first;
  const std::size_t base = c1.size();
  std::vector<std::size_t> word;
  word.reserve(2 * c.size());
  for (std::size_t p = 0; p < s.interval; ++p) word.push_back(base + c2.word()[p]);
  for (auto id : c1.word()) word.push_back(id);
  for (std::size_t p = s.interval; p < c2.word().size(); ++p) word.push_back(base + c2.word()[p]);
  return ChordDiagram::from_word(word, labels_of_parts(c1, c2));
}

ChordDiagram phi_inv(const ChordDiagram& e) {
  if (!is_indecomposable(e) || component_count(e) != 2) {
    throw DomainError("phi_inv needs an indecomposable diagram with two components, got '" +
                      format_diagram(e) + "'");
  }
  const auto ids = component_ids(e);
  std::vector<std::size_t> outer;
  std::vector<std::size_t> inner;
  for (std::size_t i = 0; i < ids.size(); ++i) (ids[i] == 0 ? outer : inner).push_back(i);

  // The inner component must occupy one contiguous run of positions.
  const int first = e.chord(inner.front()).left;
  int last = first;
  for (auto i : inner) last = std::max(last, e.chord(i).right);
  if (static_cast<std::size_t>(last - first + 1) != 2 * inner.size()) {
    throw StructureError("inner component of '" + format_diagram(e) + "' is not contiguous");
  }
  std::size_t interval = 0;
  for (auto i : outer) interval += (e.chord(i).left < first) + (e.chord(i).right < first);
  return recombine({interval, sub_diagram(e, inner), sub_diagram(e, outer)});
}

std::size_t ZTree::node_count() const {
  std::size_t n = stack.size();
  for (const auto& c : children) n += c.node_count();
  return n;
}

namespace {

void validate_vertex(const ZTree& z, std::unordered_set<Label>& seen) {
  if (z.stack.empty()) throw MalformedTreeError("vertex with an empty stack");
  for (Label l : z.stack) {
    if (l == 0) throw MalformedTreeError("label 0 in stack");
    if (!seen.insert(l).second) throw MalformedTreeError("label " + std::to_string(l) + " repeated");
  }
  const auto& s = z.structure;
  if (s.size() != z.children.size()) {
    throw MalformedTreeError("vertex " + std::to_string(z.stack.front()) + ": structure has " +
                             std::to_string(s.size()) + " chords for " +
                             std::to_string(z.children.size()) + " children");
  }
  if (!s.empty() && !s.has_labels()) {
    throw MalformedTreeError("vertex " + std::to_string(z.stack.front()) + ": unlabelled structure");
  }
  if (component_count(s) > 2) {
    throw MalformedTreeError("vertex " + std::to_string(z.stack.front()) +
                             ": structure has more than two components");
  }
  for (std::size_t i = 0; i < z.children.size(); ++i) {
    const auto& child = z.children[i];
    if (child.stack.empty() || child.stack.front() != s.label(i)) {
      throw MalformedTreeError("vertex " + std::to_string(z.stack.front()) + ": child " +
                               std::to_string(i) + " does not match structure chord " +
                               std::to_string(s.label(i)));
    }
    validate_vertex(child, seen);
  }
}

struct Vertex {
  std::vector<Label> stack;
  ChordDiagram structure;
  std::vector<std::size_t> children;
};

struct Entry {
  Label label;
  ChordDiagram left;
  ChordDiagram right;
};

void check_pending_labels(const PendingChord& p) {
  if (p.label == 0) throw LabelError("marked chord needs a positive label");
  std::unordered_set<Label> seen{p.label};
  for (const auto* d : {&p.left, &p.right}) {
    if (d->empty()) continue;
    if (!d->has_labels()) throw LabelError("dangling diagrams must be labelled");
    for (Label l : d->labels()) {
      if (!seen.insert(l).second) throw LabelError("label " + std::to_string(l) + " used twice");
    }
  }
}

class ThetaBuilder {
 public:
  explicit ThetaBuilder(const PendingChord& p) {
    check_pending_labels(p);
    new_vertex(p.label);
    queue_.push_back({p.label, p.left, p.right});
  }

  ZTree run(const ThetaTrace& trace) {
    std::size_t iteration = 0;
    while (!queue_.empty()) {
      const auto which = step(queue_.front());
      if (trace) trace({++iteration, queue_.size() - 1, which, queue_.front().label});
      queue_.pop_front();
    }
    return to_tree(0);
  }

 private:
  std::size_t new_vertex(Label label) {
    vertices_.push_back({{label}, {}, {}});
    host_[label] = vertices_.size() - 1;
    return vertices_.size() - 1;
  }

  // Children of v for the root component of d, each queued with its
  // dangling pair inside d. Returns the root component.
  ChordDiagram add_children(std::size_t v, const ChordDiagram& d) {
    const auto chords = root_component_chords(d);
    auto pairs = dangling_pairs(d);
    for (std::size_t k = 0; k < chords.size(); ++k) {
      const Label label = d.label(chords[k]);
      const auto child = new_vertex(label);
      vertices_[v].children.push_back(child);
      queue_.push_back({label, std::move(pairs[k].left), std::move(pairs[k].right)});
    }
    return sub_diagram(d, chords);
  }

  ThetaCase step(const Entry& e) {
    const std::size_t v = host_.at(e.label);
    const auto& dl = e.left;
    const auto& dr = e.right;
    if (dl.empty() && dr.empty()) return ThetaCase::both_empty;
    if (dl.empty()) {
      auto rc = add_children(v, dr);
      vertices_[v].structure = std::move(rc);
      return ThetaCase::right_only;
    }
    if (!dr.empty()) {
      const std::vector<ChordDiagram> parts{add_children(v, dl), add_children(v, dr)};
      vertices_[v].structure = concatenate(parts);
      return ThetaCase::both;
    }
    const auto chords = root_component_chords(dl);
    if (chords.size() == 1) {
      const Label label = dl.label(chords[0]);
      vertices_[v].stack.push_back(label);
      host_[label] = v;
      auto pair = dangling_pair(dl, 0);
      queue_.push_back({label, std::move(pair.left), std::move(pair.right)});
      return ThetaCase::absorb;
    }
    vertices_[v].structure = phi(add_children(v, dl));
    return ThetaCase::left_phi;
  }

  ZTree to_tree(std::size_t v) const {
    const auto& src = vertices_[v];
    ZTree out{src.stack, src.structure, {}};
    std::unordered_map<Label, std::size_t> slot;
    for (std::size_t i = 0; i < src.structure.size(); ++i) slot[src.structure.label(i)] = i;
    out.children.resize(src.children.size());
    for (auto c : src.children) out.children[slot.at(vertices_[c].stack.front())] = to_tree(c);
    return out;
  }

  std::vector<Vertex> vertices_;
  std::unordered_map<Label, std::size_t> host_;
  std::deque<Entry> queue_;
};

// Dangling pair of the node at depth i of z's stack.
DanglingPair rebuild(const ZTree& z, std::size_t i);

std::vector<DanglingPair> child_pairs(const ZTree& z, const ChordDiagram& root) {
  std::unordered_map<Label, const ZTree*> by_label;
  for (const auto& c : z.children) by_label[c.stack.front()] = &c;
  std::vector<DanglingPair> out;
  out.reserve(root.size());
  for (std::size_t k = 0; k < root.size(); ++k) out.push_back(rebuild(*by_label.at(root.label(k)), 0));
  return out;
}

ChordDiagram graft(const ZTree& z, const ChordDiagram& root) {
  const auto pairs = child_pairs(z, root);
  return attach_dangling(root, pairs);
}

DanglingPair rebuild(const ZTree& z, std::size_t i) {
  if (i + 1 < z.stack.size()) {
    // Absorbed node: the left dangler's root component is that single chord.
    const std::vector<DanglingPair> inner{rebuild(z, i + 1)};
    return {attach_dangling(single_chord(z.stack[i + 1]), inner), ChordDiagram{}};
  }
  const auto& s = z.structure;
  if (s.empty()) return {};
  const auto components = component_count(s);
  if (components == 1) return {ChordDiagram{}, graft(z, s)};
  if (components == 2 && !is_indecomposable(s)) {
    const auto factors = concat_factorization(s);
    return {graft(z, factors[0]), graft(z, factors[1])};
  }
  if (components == 2) return {graft(z, phi_inv(s)), ChordDiagram{}};
  throw MalformedTreeError("structure '" + format_diagram(s) + "' fits no inverse case");
}

}  // namespace

void validate_ztree(const ZTree& z) {
  std::unordered_set<Label> seen;
  validate_vertex(z, seen);
}

std::string_view theta_case_name(ThetaCase c) {
  switch (c) {
    case ThetaCase::both_empty: return "both-empty";
    case ThetaCase::right_only: return "right-only";
    case ThetaCase::both: return "both";
    case ThetaCase::absorb: return "absorb";
    case ThetaCase::left_phi: return "left-phi";
  }
  return "?";
}

ZTree theta(const PendingChord& p, const ThetaTrace& trace) {
  return ThetaBuilder(p).run(trace);
}

PendingChord theta_inv(const ZTree& z) {
  validate_ztree(z);
  auto pair = rebuild(z, 0);
  return {z.stack.front(), std::move(pair.left), std::move(pair.right)};
}

}  // namespace chordlab
