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

#include <string>

#include <json.hpp>

#include "chordlab/bijection.hpp"
#include "chordlab/chord_diagram.hpp"
#include "chordlab/pending_chord.hpp"
#include "chordlab/power_series.hpp"

namespace chordlab {

// Key order is part of the format, hence ordered_json.
using Json = nlohmann::ordered_json;

// {"order":N,"coeffs":["p/q",...]}
Json to_json(const PowerSeries& s);
PowerSeries series_from_json(const Json& j);

// {"n":k,"chords":[[a,b],...],"labels":[...]}; labels only when present.
Json to_json(const ChordDiagram& d);
ChordDiagram diagram_from_json(const Json& j);

// {"stack":[...],"structure":<diagram>,"children":[...]}
Json to_json(const ZTree& z);
ZTree ztree_from_json(const Json& j);

// {"label":l,"left":<diagram>,"right":<diagram>}
Json to_json(const PendingChord& p);
PendingChord pending_from_json(const Json& j);

// "x + x^2 + 4x^3", "1 - (5/2)x", "0" for the zero series.
std::string format_series(const PowerSeries& s);

}  // namespace chordlab
