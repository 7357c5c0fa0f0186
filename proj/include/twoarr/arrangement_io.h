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

// Reading and writing arrangement files.
//
// An arrangement file is a JSON document:
//
//   {
//     "dim": 4,
//     "subspaces": [
//       {"name": "H1", "forms": [["1", "0", "0", "0"], ["0", "1", "0", "0"]]},
//       {"name": "H4", "complex": {"z": [["0", "0"], ["1", "0"]],
//                                  "zbar": [["-2", "0"], ["0", "0"]]}}
//     ]
//   }
//
// Coefficients are rational strings ("-1/3"); complex coefficients are
// [re, im] pairs. Unknown fields are rejected.

#ifndef TWOARR_ARRANGEMENT_IO_H_
#define TWOARR_ARRANGEMENT_IO_H_

#include <string>
#include <string_view>

#include "twoarr/arrangement.h"

namespace twoarr {

// Shape-checked only; throws Error(kParse).
Arrangement ParseArrangementUnchecked(std::string_view document);

// Additionally throws Error(kValidation) if Validate() reports anything.
Arrangement ParseArrangement(std::string_view document);

std::string SerializeArrangement(const Arrangement& arr);

// Reads a whole file; throws Error(kParse) if it cannot be read.
std::string ReadFile(const std::string& path);

}  // namespace twoarr

#endif  // TWOARR_ARRANGEMENT_IO_H_
