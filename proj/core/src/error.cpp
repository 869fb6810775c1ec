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

#include "numrad/error.hpp"

namespace numrad {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::NonSquare: return "NonSquare";
    case Errc::NotHermitian: return "NotHermitian";
    case Errc::NegativeSpectrum: return "NegativeSpectrum";
    case Errc::NotPSD: return "NotPSD";
    case Errc::WrongDimension: return "WrongDimension";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::NotUnit: return "NotUnit";
    case Errc::InvalidPair: return "InvalidPair";
    case Errc::NegativeInput: return "NegativeInput";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::UnknownBound: return "UnknownBound";
    case Errc::MissingParam: return "MissingParam";
    case Errc::DimOutOfRange: return "DimOutOfRange";
    case Errc::Parse: return "Parse";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code), detail_(what) {}

}  // namespace numrad
