// Copyright 2026 The qcdm Authors
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
#include <string_view>

#include "qcdm/linalg.hpp"
#include "qcdm/state.hpp"

namespace qcdm {

/// In-memory form of a QSM text file:
///
///   qsm 1
///   dims d1 d2 ... dk
///   (re,im) (re,im) ...      <- one line per matrix row
///
/// '#' starts a comment running to end of line; blank lines are ignored.
struct QsmDocument {
  Dims dims;
  Matrix matrix;

  friend bool operator==(const QsmDocument&, const QsmDocument&) = default;
};

/// Largest accepted matrix dimension.
inline constexpr std::size_t kMaxQsmDim = 4096;

/// Throws ParseError with 1-based line and column.
QsmDocument parse_qsm(std::string_view text);

/// Canonical text: entries as "(re,im)" with 17 significant digits, single
/// spaces, trailing newline. parse_qsm(emit_qsm(d)) == d bit for bit.
std::string emit_qsm(const QsmDocument& doc);

/// Canonical rendering of one real value ("%.17g").
std::string format_exact(double value);

}  // namespace qcdm
