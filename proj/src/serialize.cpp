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

#include "chordlab/serialize.hpp"

#include "chordlab/errors.hpp"

namespace chordlab {

namespace {

template <class F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw ParseError(std::string("bad ") + what + " JSON: " + e.what());
  }
}

}  // namespace

Json to_json(const PowerSeries& s) {
  Json coeffs = Json::array();
  for (const auto& c : s.coeffs()) coeffs.push_back(to_string(c));
  return Json{{"order", s.order()}, {"coeffs", std::move(coeffs)}};
}

PowerSeries series_from_json(const Json& j) {
  return guarded("series", [&] {
    const auto order = j.at("order").get<std::size_t>();
    std::vector<Rational> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(parse_rational(c.get<std::string>()));
    if (coeffs.size() != order + 1) throw ParseError("series JSON: coefficient count does not match order");
    return PowerSeries(std::move(coeffs));
  });
}

Json to_json(const ChordDiagram& d) {
  Json chords = Json::array();
  for (const auto& c : d.chords()) chords.push_back(Json::array({c.left, c.right}));
  Json out{{"n", d.size()}, {"chords", std::move(chords)}};
  if (d.has_labels()) out["labels"] = Json(std::vector<Label>(d.labels().begin(), d.labels().end()));
  return out;
}

ChordDiagram diagram_from_json(const Json& j) {
  return guarded("diagram", [&] {
    std::vector<Chord> chords;
    for (const auto& c : j.at("chords")) chords.push_back({c.at(0).get<int>(), c.at(1).get<int>()});
    if (j.at("n").get<std::size_t>() != chords.size()) throw ParseError("diagram JSON: n does not match chords");
    std::vector<Label> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<Label>>();
    try {
      return ChordDiagram::from_chords(std::move(chords), std::move(labels));
    } catch (const DomainError& e) {
      throw ParseError(std::string("diagram JSON: ") + e.what());
    }
  });
}

Json to_json(const ZTree& z) {
  Json children = Json::array();
  for (const auto& c : z.children) children.push_back(to_json(c));
  return Json{{"stack", z.stack}, {"structure", to_json(z.structure)}, {"children", std::move(children)}};
}

ZTree ztree_from_json(const Json& j) {
  return guarded("Z-tree", [&] {
    ZTree z;
    z.stack = j.at("stack").get<std::vector<Label>>();
    z.structure = diagram_from_json(j.at("structure"));
    for (const auto& c : j.at("children")) z.children.push_back(ztree_from_json(c));
    return z;
  });
}

Json to_json(const PendingChord& p) {
  return Json{{"label", p.label}, {"left", to_json(p.left)}, {"right", to_json(p.right)}};
}

PendingChord pending_from_json(const Json& j) {
  return guarded("pending chord", [&] {
    return PendingChord{j.at("label").get<Label>(), diagram_from_json(j.at("left")),
                        diagram_from_json(j.at("right"))};
  });
}

std::string format_series(const PowerSeries& s) {
  std::string out;
  for (std::size_t k = 0; k < s.coeffs().size(); ++k) {
    const auto& c = s[k];
    if (c == 0) continue;
    const bool negative = c < 0;
    const Rational mag = abs(c);
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    const bool integral = mag.get_den() == 1;
    if (k == 0) {
      out += to_string(mag);
    } else if (mag != 1) {
      out += integral ? to_string(mag) : "(" + to_string(mag) + ")";
    }
    if (k >= 1) out += 'x';
    if (k >= 2) out += '^' + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

}  // namespace chordlab
