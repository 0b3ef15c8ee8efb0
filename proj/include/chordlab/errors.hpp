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

#include <stdexcept>
#include <string>

namespace chordlab {

// Base of every error raised by the library. The CLI maps these onto exit
// code 2 (usage) unless a check explicitly failed.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define CHORDLAB_DEFINE_ERROR(Name)      \
  class Name : public Error {            \
   public:                               \
    using Error::Error;                  \
  }

CHORDLAB_DEFINE_ERROR(DivisionError);
CHORDLAB_DEFINE_ERROR(CompositionError);
CHORDLAB_DEFINE_ERROR(DomainError);
CHORDLAB_DEFINE_ERROR(OrderError);
CHORDLAB_DEFINE_ERROR(UsageError);
CHORDLAB_DEFINE_ERROR(ParseError);
CHORDLAB_DEFINE_ERROR(EmptyDiagramError);
CHORDLAB_DEFINE_ERROR(NotRootComponentError);
CHORDLAB_DEFINE_ERROR(StructureError);
CHORDLAB_DEFINE_ERROR(LabelError);
CHORDLAB_DEFINE_ERROR(MalformedTreeError);

#undef CHORDLAB_DEFINE_ERROR

}  // namespace chordlab
