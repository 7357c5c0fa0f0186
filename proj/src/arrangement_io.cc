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

#include "twoarr/arrangement_io.h"

#include <fstream>
#include <initializer_list>
#include <sstream>

#include "json.hpp"

#include "twoarr/error.h"

namespace twoarr {

namespace {

using nlohmann::json;

[[noreturn]] void Fail(const std::string& message) {
  throw Error(ErrorKind::kParse, message);
}

void RejectUnknownKeys(const json& object, std::initializer_list<const char*> allowed,
                       const std::string& where) {
  for (const auto& [key, value] : object.items()) {
    bool known = false;
    for (const char* a : allowed) known = known || key == a;
    if (!known) Fail("unknown field '" + key + "' in " + where);
  }
}

Rational RationalField(const json& value, const std::string& where) {
  if (!value.is_string()) Fail(where + ": coefficients must be rational strings");
  return ParseRational(value.get<std::string>());
}

Vector FormField(const json& value, int dim, const std::string& where) {
  if (!value.is_array()) Fail(where + ": form must be a list");
  if (static_cast<int>(value.size()) != dim) {
    Fail(where + ": expected " + std::to_string(dim) + " coefficients, got " +
         std::to_string(value.size()));
  }
  Vector v;
  for (const json& c : value) v.push_back(RationalField(c, where));
  return v;
}

std::vector<ComplexNumber> ComplexList(const json& value, int d,
                                       const std::string& where) {
  if (!value.is_array() || static_cast<int>(value.size()) != d) {
    Fail(where + ": expected a list of " + std::to_string(d) + " [re, im] pairs");
  }
  std::vector<ComplexNumber> out;
  for (const json& pair : value) {
    if (!pair.is_array() || pair.size() != 2) {
      Fail(where + ": complex coefficients are [re, im] pairs");
    }
    out.push_back({RationalField(pair[0], where), RationalField(pair[1], where)});
  }
  return out;
}

json RationalJson(const Rational& r) { return FormatRational(r); }

}  // namespace

Arrangement ParseArrangementUnchecked(std::string_view document) {
  json root;
  try {
    root = json::parse(document);
  } catch (const json::parse_error& e) {
    Fail(std::string("malformed document: ") + e.what());
  }
  if (!root.is_object()) Fail("document must be an object");
  RejectUnknownKeys(root, {"dim", "subspaces"}, "document");
  if (!root.contains("dim") || !root["dim"].is_number_integer()) {
    Fail("missing integer field 'dim'");
  }
  const int dim = root["dim"].get<int>();
  if (dim <= 0 || dim % 2 != 0) Fail("'dim' must be a positive even integer");
  if (!root.contains("subspaces") || !root["subspaces"].is_array()) {
    Fail("missing list field 'subspaces'");
  }
  std::vector<SubspacePair> members;
  for (const json& record : root["subspaces"]) {
    if (!record.is_object()) Fail("subspace records must be objects");
    RejectUnknownKeys(record, {"name", "forms", "complex"}, "subspace record");
    if (!record.contains("name") || !record["name"].is_string()) {
      Fail("subspace record without a string 'name'");
    }
    const std::string name = record["name"].get<std::string>();
    const bool has_forms = record.contains("forms");
    const bool has_complex = record.contains("complex");
    if (has_forms == has_complex) {
      Fail("subspace '" + name + "' needs exactly one of 'forms' or 'complex'");
    }
    try {
      if (has_forms) {
        const json& forms = record["forms"];
        if (!forms.is_array() || forms.size() != 2) {
          Fail("subspace '" + name + "': 'forms' must hold two forms");
        }
        members.push_back(SubspacePair{
            name, LinearForm(FormField(forms[0], dim, "subspace '" + name + "'")),
            LinearForm(FormField(forms[1], dim, "subspace '" + name + "'")),
            std::nullopt});
      } else {
        const json& complex = record["complex"];
        if (!complex.is_object()) Fail("subspace '" + name + "': 'complex' must be an object");
        RejectUnknownKeys(complex, {"z", "zbar"}, "complex form of '" + name + "'");
        const int d = dim / 2;
        ComplexFormSpec spec;
        auto zeros = [d] {
          return std::vector<ComplexNumber>(d, ComplexNumber{0, 0});
        };
        spec.z = complex.contains("z")
                     ? ComplexList(complex["z"], d, "subspace '" + name + "'")
                     : zeros();
        spec.zbar = complex.contains("zbar")
                        ? ComplexList(complex["zbar"], d, "subspace '" + name + "'")
                        : zeros();
        auto [first, second] = FromComplexForm(spec, d);
        members.push_back(SubspacePair{name, std::move(first), std::move(second),
                                       std::move(spec)});
      }
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::kZeroForm) Fail("subspace '" + name + "': zero form");
      throw;
    }
  }
  try {
    return Arrangement(dim, std::move(members));
  } catch (const Error& e) {
    Fail(e.what());
  }
}

Arrangement ParseArrangement(std::string_view document) {
  Arrangement arr = ParseArrangementUnchecked(document);
  ValidationReport report = Validate(arr);
  if (!report.ok()) {
    throw Error(ErrorKind::kValidation, report.violations.front().Describe());
  }
  return arr;
}

std::string SerializeArrangement(const Arrangement& arr) {
  json members = json::array();
  for (const SubspacePair& s : arr.subspaces()) {
    json record;
    record["name"] = s.name;
    if (s.complex_spec) {
      json z = json::array(), zbar = json::array();
      for (const ComplexNumber& c : s.complex_spec->z) {
        z.push_back(json::array({RationalJson(c.re), RationalJson(c.im)}));
      }
      for (const ComplexNumber& c : s.complex_spec->zbar) {
        zbar.push_back(json::array({RationalJson(c.re), RationalJson(c.im)}));
      }
      record["complex"] = {{"z", z}, {"zbar", zbar}};
    } else {
      json first = json::array(), second = json::array();
      for (const Rational& c : s.first.coefficients()) first.push_back(RationalJson(c));
      for (const Rational& c : s.second.coefficients()) second.push_back(RationalJson(c));
      record["forms"] = json::array({first, second});
    }
    members.push_back(std::move(record));
  }
  json root;
  root["dim"] = arr.dim();
  root["subspaces"] = std::move(members);
  return root.dump(2) + "\n";
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) Fail("cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace twoarr
