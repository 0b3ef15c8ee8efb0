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

#include <doctest.h>

#include <algorithm>

#include "chordlab/chord_diagram.hpp"
#include "chordlab/enumerate.hpp"
#include "chordlab/errors.hpp"
#include "chordlab/structure.hpp"

using namespace chordlab;

namespace {

ChordDiagram dg(std::string_view text) { return parse_diagram(text); }

}  // namespace

TEST_CASE("parse and format") {
  CHECK(dg("").empty());
  CHECK(format_diagram(dg("")) == "");
  const auto d = dg("2-4,1-3");
  CHECK(format_diagram(d) == "1-3,2-4");
  CHECK(format_diagram(dg("4-1,2-3")) == "1-4,2-3");
  CHECK(d.chord_at(4) == 1);
  CHECK(std::vector<int>(d.partners().begin(), d.partners().end()) == std::vector<int>{2, 3, 0, 1});

  for (const char* bad : {"1-3,2", "1-1,2-3", "1-5,2-3", "1-2,2-3", "a-b", "1-2,,3-4", "0-1"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(dg(bad), ParseError);
  }
  try {
    dg("1-2,2-3");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("2-3") != std::string::npos);
  }
}

TEST_CASE("text round trip over all small diagrams") {
  for (std::size_t n = 0; n <= 5; ++n) {
    for_each_diagram(n, [](const ChordDiagram& d) { CHECK(dg(format_diagram(d)) == d); });
  }
}

TEST_CASE("labels") {
  const auto d = ChordDiagram::from_chords({{2, 4}, {1, 3}}, {7, 5});
  CHECK(d.label(0) == 5);
  CHECK(d.label(1) == 7);
  CHECK(d.without_labels() == dg("1-3,2-4"));
  CHECK(d.without_labels() != d);
  CHECK_THROWS_AS(ChordDiagram::from_chords({{1, 3}, {2, 4}}, {1, 1}), LabelError);
  CHECK_THROWS_AS(ChordDiagram::from_chords({{1, 3}, {2, 4}}, {1}), LabelError);
  CHECK_THROWS_AS(ChordDiagram::from_chords({{1, 3}, {2, 5}}), DomainError);
}

TEST_CASE("crossings and the intersection graph") {
  CHECK(crosses({1, 3}, {2, 4}));
  CHECK(crosses({2, 4}, {1, 3}));
  CHECK_FALSE(crosses({1, 4}, {2, 3}));
  CHECK_FALSE(crosses({1, 2}, {3, 4}));

  CHECK(intersection_graph(dg("1-3,2-4")).edges == std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}});
  CHECK(intersection_graph(dg("1-4,2-3")).edges.empty());
  // (1,4) crosses (2,6) and (3,5); (2,6) and (3,5) are nested.
  const auto g = intersection_graph(dg("1-4,2-6,3-5"));
  CHECK(g.edges == std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}, {0, 2}});
  CHECK_FALSE(g.adjacent(1, 2));
  CHECK(g.adjacent(1, 0));
}

TEST_CASE("crossing is symmetric and components induce subgraphs") {
  for_each_diagram(5, [](const ChordDiagram& d) {
    const auto g = intersection_graph(d);
    for (std::size_t i = 0; i < d.size(); ++i) {
      CHECK_FALSE(g.adjacent(i, i));
      for (std::size_t j = 0; j < d.size(); ++j) {
        CHECK(crosses(d.chord(i), d.chord(j)) == crosses(d.chord(j), d.chord(i)));
      }
    }
    std::size_t total = 0;
    for (const auto& comp : connected_components(d)) {
      CHECK(is_connected(comp));
      total += comp.size();
    }
    CHECK(total == d.size());
    CHECK(connected_components(d).size() == component_count(d));
  });
}

TEST_CASE("components") {
  CHECK(connected_components(dg("")).empty());
  const auto nested = connected_components(dg("1-4,2-3"));
  REQUIRE(nested.size() == 2);
  CHECK(nested[0] == single_chord());
  CHECK(nested[1] == single_chord());
  const auto c = dg("1-4,2-6,3-5");
  CHECK(connected_components(c) == std::vector<ChordDiagram>{c});

  const auto labelled = ChordDiagram::from_chords({{1, 4}, {2, 3}}, {9, 4});
  CHECK(connected_components(labelled)[1] == single_chord(4));
}

TEST_CASE("root component") {
  CHECK(root_component(dg("1-3,2-4")) == dg("1-3,2-4"));
  CHECK(root_component(dg("1-2,3-6,4-5")) == single_chord());
  CHECK(root_component(dg("1-4,2-3")) == single_chord());
  CHECK(root_component(dg("1-5,2-6,3-4,7-8")) == dg("1-3,2-4"));
  CHECK_THROWS_AS(root_component(dg("")), EmptyDiagramError);
}

TEST_CASE("dangling diagrams") {
  const auto connected = dg("1-4,2-6,3-5");
  for (std::size_t k = 0; k < 3; ++k) CHECK(dangling_pair(connected, k) == DanglingPair{});

  CHECK(dangling_pair(dg("1-4,2-3"), 0) == DanglingPair{single_chord(), {}});
  CHECK(dangling_pair(dg("1-2,3-4"), 0) == DanglingPair{{}, single_chord()});
  CHECK_THROWS_AS(dangling_pair(dg("1-2,3-4"), 1), NotRootComponentError);

  const auto labelled = ChordDiagram::from_chords({{1, 6}, {2, 3}, {4, 5}}, {1, 2, 3});
  const auto pr = dangling_pair(labelled, 0);
  CHECK(pr.left == ChordDiagram::from_chords({{1, 2}, {3, 4}}, {2, 3}));
  CHECK(pr.right.empty());
}

TEST_CASE("root component and danglers partition every diagram") {
  for (std::size_t n = 1; n <= 6; ++n) {
    for_each_diagram(n, [n](const ChordDiagram& d) {
      const auto root = root_component(d);
      const auto pairs = dangling_pairs(d);
      REQUIRE(pairs.size() == root.size());
      std::size_t total = root.size();
      for (const auto& p : pairs) total += p.left.size() + p.right.size();
      CHECK(total == n);
      CHECK(attach_dangling(root, pairs) == d);
    });
  }
}

TEST_CASE("concatenation factors") {
  CHECK(concat_factorization(dg("")).empty());
  CHECK(concat_factorization(dg("1-3,2-4")) == std::vector<ChordDiagram>{dg("1-3,2-4")});
  CHECK(concat_factorization(dg("1-2,3-4")) == std::vector<ChordDiagram>{single_chord(), single_chord()});
  std::size_t one_factor = 0;
  for_each_diagram(3, [&](const ChordDiagram& d) { one_factor += concat_factorization(d).size() == 1; });
  CHECK(one_factor == 10);
}

TEST_CASE("factorization inverts concatenation, and connected implies indecomposable") {
  for (std::size_t n = 0; n <= 7; ++n) {
    for_each_diagram(n, [](const ChordDiagram& d) {
      const auto factors = concat_factorization(d);
      if (concatenate(factors) != d) FAIL_CHECK("concat fails on ", format_diagram(d));
      for (const auto& f : factors) {
        if (!is_indecomposable(f)) FAIL_CHECK("decomposable factor in ", format_diagram(d));
      }
      if (is_connected(d) && !is_indecomposable(d)) FAIL_CHECK("connected but decomposable: ", format_diagram(d));
    });
  }
}

TEST_CASE("root removal") {
  const auto crossing = root_removal_decomposition(dg("1-3,2-4"));
  CHECK(crossing.factors == std::vector<ChordDiagram>{single_chord()});
  CHECK(crossing.marked_interval == 1);
  const auto nested = root_removal_decomposition(dg("1-4,2-3"));
  CHECK(nested.factors == std::vector<ChordDiagram>{single_chord()});
  CHECK(nested.marked_interval == 2);
  CHECK_THROWS_AS(root_removal_decomposition(single_chord()), DomainError);
  CHECK_THROWS_AS(root_removal_decomposition(dg("1-2,3-4")), DomainError);

  RootRemoval bad{{single_chord()}, 3, {}};
  CHECK_THROWS_AS(root_insertion(bad), DomainError);

  const auto labelled = ChordDiagram::from_chords({{1, 4}, {2, 3}}, {5, 6});
  const auto r = root_removal_decomposition(labelled);
  CHECK(r.root_label == Label{5});
  CHECK(root_insertion(r) == labelled);
}

TEST_CASE("root removal round-trips on all indecomposables up to 6 chords") {
  for (std::size_t n = 2; n <= 6; ++n) {
    std::size_t weight_n = 0;
    for_each_in_class(DiagramClass::indecomposable, n, [&](const ChordDiagram& d) {
      const auto r = root_removal_decomposition(d);
      CHECK(r.marked_interval >= 1);
      CHECK(r.marked_interval <= 2 * r.factors.back().size());
      CHECK(root_insertion(r) == d);
      ++weight_n;
    });
    // Every (factor list, interval of the last factor) of weight n-1 is hit.
    std::vector<std::uint64_t> ind(n, 0);
    for (std::size_t k = 1; k < n; ++k) ind[k] = count_class(DiagramClass::indecomposable, k);
    // lists[w][m]: factor lists of total weight w whose last factor has m chords.
    std::vector<std::uint64_t> lists(n, 0);
    lists[0] = 1;
    for (std::size_t w = 1; w < n; ++w) {
      for (std::size_t m = 1; m <= w; ++m) lists[w] += lists[w - m] * ind[m];
    }
    std::uint64_t pairs = 0;
    for (std::size_t m = 1; m < n; ++m) pairs += lists[n - 1 - m] * ind[m] * 2 * m;
    CHECK(pairs == weight_n);
  }
}
