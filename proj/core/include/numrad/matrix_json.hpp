// Copyright 2026 The numrad Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <string_view>

#include "numrad/matrix.hpp"

namespace numrad {

/// Reads `{"rows": n, "cols": m, "data": [[re, im], ...]}` (row-major).
/// Throws Errc::Parse naming the offending field or entry index.
ComplexMatrix matrix_from_json(std::string_view text);

/// Writes the same schema; doubles are printed round-trip exact.
std::string matrix_to_json(const ComplexMatrix& m);

/// Reads a file and parses it with matrix_from_json.
ComplexMatrix read_matrix_file(const std::string& path);

}  // namespace numrad
