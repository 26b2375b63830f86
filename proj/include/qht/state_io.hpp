// Copyright 2026 The qhtest Authors
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

// State files are JSON documents:
//
//   {
//     "dim": 2,
//     "re": [[0.5, 0.5], [0.5, 0.5]],
//     "im": [[0.0, 0.0], [0.0, 0.0]]
//   }
//
// "im" may be omitted for real matrices. Loading applies every
// DensityMatrix invariant.

#pragma once

#include <string>

#include "qht/states.hpp"

namespace qht {

/// Throws ParseError (with line and column when the JSON is malformed) or
/// InvalidStateError.
DensityMatrix parse_state(const std::string& text);

/// Throws IoError when the file cannot be read.
DensityMatrix load_state(const std::string& path);

std::string format_state(const DensityMatrix& rho);

/// Throws IoError when the file cannot be written.
void save_state(const DensityMatrix& rho, const std::string& path);

}  // namespace qht
