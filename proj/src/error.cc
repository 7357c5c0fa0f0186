// Copyright 2026 The Authors.
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

#include "twoarr/error.h"

namespace twoarr {

std::string_view ErrorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kParse:
      return "ParseError";
    case ErrorKind::kValidation:
      return "ValidationError";
    case ErrorKind::kNoSolution:
      return "NoSolution";
    case ErrorKind::kNotUnique:
      return "NotUnique";
    case ErrorKind::kNotSquare:
      return "NotSquare";
    case ErrorKind::kZeroForm:
      return "ZeroForm";
    case ErrorKind::kUnknownLabel:
      return "UnknownLabel";
    case ErrorKind::kDegenerateRestriction:
      return "DegenerateRestriction";
    case ErrorKind::kNotACircuit:
      return "NotACircuit";
    case ErrorKind::kModeMismatch:
      return "ModeMismatch";
    case ErrorKind::kDimensionNot4:
      return "DimensionNot4";
    case ErrorKind::kSizeMismatch:
      return "SizeMismatch";
  }
  return "Error";
}

}  // namespace twoarr
