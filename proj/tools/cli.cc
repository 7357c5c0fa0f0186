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

#include "cli.h"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "twoarr/arrangement.h"
#include "twoarr/arrangement_io.h"
#include "twoarr/error.h"
#include "twoarr/exterior.h"
#include "twoarr/invariants.h"
#include "twoarr/matroid.h"
#include "twoarr/presentation.h"

namespace twoarr::cli {

namespace {

using nlohmann::json;

enum class Format { kText, kJson };

struct Options {
  Format format = Format::kText;
  std::vector<std::string> inputs;
  std::string order;
  std::string index;
  std::string mode = "real";
  bool normalize_signs = false;
  bool no_permutation_search = false;
};

// Signals that a loaded arrangement failed validation; carries the report
// that was already written to stderr.
struct InvalidInput {};

json Members(IndexSet s) {
  json out = json::array();
  for (int e : s.Elements()) out.push_back(e + 1);
  return out;
}

std::string SignString(int s) { return s > 0 ? "+1" : (s < 0 ? "-1" : "0"); }

template <typename T>
std::string Join(const std::vector<T>& values, const std::string& sep = " ") {
  std::ostringstream s;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) s << sep;
    s << values[i];
  }
  return s.str();
}

std::string SetList(IndexSet s) {
  if (s.empty()) return "{}";
  return s.ToString();
}

Arrangement Load(const std::string& path, std::ostream& err) {
  Arrangement arr = ParseArrangementUnchecked(ReadFile(path));
  const ValidationReport report = Validate(arr);
  if (!report.ok()) {
    err << path << ": not an admissible 2-arrangement\n";
    for (const Violation& v : report.violations) err << "  " << v.Describe() << "\n";
    throw InvalidInput{};
  }
  return arr;
}

int RunValidate(const Options& o, std::ostream& out) {
  const Arrangement arr = ParseArrangementUnchecked(ReadFile(o.inputs[0]));
  const ValidationReport report = Validate(arr);
  if (o.format == Format::kJson) {
    json violations = json::array();
    for (const Violation& v : report.violations) {
      violations.push_back({{"witness", Members(v.witness)},
                            {"rank", v.rank},
                            {"message", v.Describe()}});
    }
    out << json{{"valid", report.ok()}, {"violations", violations}}.dump(2) << "\n";
  } else if (report.ok()) {
    out << "valid: " << arr.size() << " subspaces in R^" << arr.dim() << "\n";
  } else {
    for (const Violation& v : report.violations) out << "violation: " << v.Describe() << "\n";
  }
  return report.ok() ? kExitOk : kExitInvalid;
}

int RunLattice(const Options& o, std::ostream& out, std::ostream& err) {
  const Arrangement arr = Load(o.inputs[0], err);
  const IntersectionLattice lattice = Flats(arr);
  const std::vector<std::int64_t> mu = Mobius(lattice);
  if (o.format == Format::kJson) {
    json flats = json::array();
    for (std::size_t i = 0; i < lattice.flats.size(); ++i) {
      flats.push_back({{"elements", Members(lattice.flats[i].elements)},
                       {"rank", lattice.flats[i].rank},
                       {"mobius", mu[i]}});
    }
    json covers = json::array();
    for (std::size_t i = 0; i < lattice.upper_covers.size(); ++i) {
      for (std::size_t j : lattice.upper_covers[i]) covers.push_back({i, j});
    }
    out << json{{"flats", flats}, {"covers", covers}, {"rank", lattice.rank()}}.dump(2)
        << "\n";
    return kExitOk;
  }
  for (int r = 0; r <= lattice.rank(); ++r) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < lattice.flats.size(); ++i) {
      if (lattice.flats[i].rank == r) names.push_back(SetList(lattice.flats[i].elements));
    }
    out << "rank " << r << " (" << names.size() << "): " << Join(names) << "\n";
  }
  return kExitOk;
}

int RunCircuits(const Options& o, std::ostream& out, std::ostream& err) {
  const Arrangement arr = Load(o.inputs[0], err);
  const std::vector<Circuit> circuits = Circuits(arr);
  if (o.format == Format::kJson) {
    json list = json::array();
    for (const Circuit& c : circuits) list.push_back(Members(c.elements));
    out << json{{"circuits", list}}.dump(2) << "\n";
    return kExitOk;
  }
  out << circuits.size() << " circuits\n";
  for (const Circuit& c : circuits) out << "  " << c.elements.ToString() << "\n";
  return kExitOk;
}

std::vector<int> ParseOrder(const std::string& text, const Arrangement& arr) {
  std::vector<int> order;
  if (text.empty()) return order;
  std::stringstream s(text);
  std::string item;
  while (std::getline(s, item, ',')) order.push_back(arr.IndexOf(item));
  if (static_cast<int>(order.size()) != arr.size()) {
    throw Error(ErrorKind::kParse, "--order must list every member exactly once");
  }
  return order;
}

int RunBetti(const Options& o, std::ostream& out, std::ostream& err) {
  const Arrangement arr = Load(o.inputs[0], err);
  const NbcComplex nbc = NbcSets(arr, ParseOrder(o.order, arr));
  std::vector<std::size_t> betti(arr.complex_dim() + 1);
  for (std::size_t p = 0; p < betti.size(); ++p) betti[p] = nbc.Count(p);
  const bool whitney = WhitneyCheck(arr);
  if (o.format == Format::kJson) {
    json sets = json::array();
    for (const auto& group : nbc.by_size) {
      for (IndexSet s : group) sets.push_back(Members(s));
    }
    out << json{{"betti", betti}, {"nbc", sets}, {"whitney_check", whitney}}.dump(2)
        << "\n";
    return kExitOk;
  }
  out << "betti: " << Join(betti) << "\n";
  std::vector<std::string> names;
  for (const auto& group : nbc.by_size) {
    for (IndexSet s : group) names.push_back(SetList(s));
  }
  out << "nbc:   " << Join(names) << "\n";
  out << "whitney check: " << (whitney ? "pass" : "FAIL") << "\n";
  return kExitOk;
}

int RunPresent(const Options& o, std::ostream& out, std::ostream& err) {
  const Arrangement arr = Load(o.inputs[0], err);
  const PresentationMode mode =
      o.mode == "complex" ? PresentationMode::kComplex : PresentationMode::kReal;
  const Presentation p = FullPresentation(arr, mode);
  const std::vector<std::size_t> profile = IdealRankProfile(p);
  auto element = [&](const CircuitRelation& r) {
    return (o.normalize_signs ? NormalizeSign(r.element) : r.element).ToString();
  };
  if (o.format == Format::kJson) {
    json relations = json::array();
    for (const CircuitRelation& r : p.relations) {
      relations.push_back({{"circuit", Members(r.circuit.elements)},
                           {"signs", r.signs},
                           {"element", element(r)}});
    }
    out << json{{"mode", o.mode}, {"relations", relations}, {"ideal_ranks", profile}}
               .dump(2)
        << "\n";
    return kExitOk;
  }
  out << p.relations.size() << " relations (" << o.mode << " mode)\n";
  std::size_t width = 0;
  for (const CircuitRelation& r : p.relations) {
    width = std::max(width, r.circuit.elements.ToString().size());
  }
  for (const CircuitRelation& r : p.relations) {
    std::vector<std::string> signs;
    for (int s : r.signs) signs.push_back(SignString(s));
    out << "  " << std::left << std::setw(static_cast<int>(width))
        << r.circuit.elements.ToString() << "  sigma " << Join(signs) << "   "
        << element(r) << "\n";
  }
  out << "ideal ranks (degrees 1.." << p.n << "): " << Join(profile) << "\n";
  return kExitOk;
}

int RunKappa(const Options& o, std::ostream& out, std::ostream& err) {
  const Arrangement arr = Load(o.inputs[0], err);
  const KappaForm kappa = Kappa(arr);
  const std::size_t rank = KappaRank(kappa);
  json basis = json::array();
  for (const ExtElement& b : kappa.basis) basis.push_back(b.ToString());
  if (o.format == Format::kJson) {
    json gram = json::array();
    for (const auto& row : kappa.gram) {
      json jrow = json::array();
      for (const auto& entry : row) {
        json values = json::array();
        for (const Integer& v : entry) values.push_back(v.str());
        if (!kappa.extension()) {
          jrow.push_back(values.empty() ? json("0") : values.front());
        } else {
          jrow.push_back(values);
        }
      }
      gram.push_back(jrow);
    }
    out << json{{"kappa",
                 {{"basis_size", kappa.basis.size()},
                  {"basis", basis},
                  {"rank", rank},
                  {"gram", gram},
                  {"extension", kappa.extension()}}}}
               .dump(2)
        << "\n";
    return kExitOk;
  }
  out << "I^2 basis (" << kappa.basis.size() << "):\n";
  for (const ExtElement& b : kappa.basis) out << "  " << b.ToString() << "\n";
  if (!kappa.extension()) {
    out << "gram:\n";
    for (const auto& row : kappa.ScalarGram()) {
      out << " ";
      for (const Integer& v : row) out << " " << std::right << std::setw(3) << v.str();
      out << "\n";
    }
  } else {
    out << "gram: Lambda^4-valued (" << kappa.top_monomials.size()
        << " components); n != 4 extension\n";
  }
  out << "kappa rank: " << rank << "\n";
  return kExitOk;
}

int RunLinking(const Options& o, std::ostream& out, std::ostream& err) {
  const Arrangement arr = Load(o.inputs[0], err);
  const SignMatrix pairwise = PairwiseLinking(arr);
  const TripleMap triples = TripleCoefficients(arr);
  if (o.format == Format::kJson) {
    json jtriples = json::array();
    for (const auto& [t, s] : triples) {
      jtriples.push_back({{"members", Members(t)}, {"sign", s}});
    }
    out << json{{"linking", {{"pairwise", pairwise}, {"triples", jtriples}}}}.dump(2)
        << "\n";
    return kExitOk;
  }
  out << "pairwise linking signs:\n";
  for (const auto& row : pairwise) {
    out << " ";
    for (int s : row) out << " " << std::right << std::setw(2) << (s == 0 ? "." : SignString(s));
    out << "\n";
  }
  out << "triple coefficients:\n";
  for (const auto& [t, s] : triples) out << "  " << t.ToString() << "  " << SignString(s) << "\n";
  return kExitOk;
}

int RunRestrict(const Options& o, std::ostream& out, std::ostream& err) {
  const Arrangement arr = Load(o.inputs[0], err);
  out << SerializeArrangement(Restrict(arr, arr.IndexOf(o.index)));
  return kExitOk;
}

int RunCompare(const Options& o, std::ostream& out, std::ostream& err) {
  const Arrangement a1 = Load(o.inputs[0], err);
  const Arrangement a2 = Load(o.inputs[1], err);
  CompareOptions options;
  options.permutation_search = !o.no_permutation_search;
  const ComparisonReport r = Compare(a1, a2, options);
  const int code =
      r.verdict == Verdict::kDistinguished ? kExitDistinguished : kExitOk;
  if (o.format == Format::kJson) {
    json matroid = {{"labeled_equal", r.same_labeled_matroid}};
    matroid["isomorphic"] =
        r.isomorphic_matroids ? json(*r.isomorphic_matroids) : json(nullptr);
    json triples = nullptr;
    if (r.triple_multiset[0]) {
      triples = json::array({*r.triple_multiset[0], *r.triple_multiset[1]});
    }
    out << json{{"matroid", matroid},
                {"betti", json::array({r.betti[0], r.betti[1]})},
                {"ideal_ranks", json::array({r.ideal_ranks[0], r.ideal_ranks[1]})},
                {"kappa",
                 {{"rank", json::array({r.kappa_rank[0], r.kappa_rank[1]})},
                  {"extension", r.kappa_extension}}},
                {"triples", triples},
                {"differences", r.differences},
                {"verdict", VerdictName(r.verdict)}}
               .dump(2)
        << "\n";
    return code;
  }
  auto line = [&](const std::string& name, const std::string& left,
                  const std::string& right) {
    out << std::left << std::setw(16) << name << std::setw(20) << left << right << "\n";
  };
  line("", "first", "second");
  out << std::left << std::setw(16) << "matroid"
      << "labeled " << (r.same_labeled_matroid ? "equal" : "different");
  if (r.isomorphic_matroids) {
    out << ", " << (*r.isomorphic_matroids ? "isomorphic" : "not isomorphic");
  }
  out << "\n";
  line("betti", Join(r.betti[0]), Join(r.betti[1]));
  line("ideal ranks", Join(r.ideal_ranks[0]), Join(r.ideal_ranks[1]));
  line(r.kappa_extension ? "kappa rank*" : "kappa rank", std::to_string(r.kappa_rank[0]),
       std::to_string(r.kappa_rank[1]));
  if (r.triple_multiset[0]) {
    auto signs = [](const std::vector<int>& v) {
      std::vector<std::string> s;
      for (int x : v) s.push_back(SignString(x));
      return Join(s);
    };
    line("triples", signs(*r.triple_multiset[0]), signs(*r.triple_multiset[1]));
  }
  if (r.kappa_extension) out << "* Lambda^4-valued pairing (n != 4)\n";
  out << "verdict: " << VerdictName(r.verdict);
  if (!r.differences.empty()) out << " (" << Join(r.differences, ", ") << ")";
  out << "\n";
  return code;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cohomology presentations and invariants of 2-arrangements", "twoarr"};
  app.fallthrough();
  app.require_subcommand(1);
  Options o;
  std::string format = "text";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));

  auto single = [&](const std::string& name, const std::string& help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("file", o.inputs, "Arrangement file")->required()->expected(1);
    return sub;
  };
  single("validate", "Check the admissibility conditions");
  single("lattice", "Intersection lattice (flats by rank)");
  single("circuits", "Circuits of the matroid");
  single("betti", "Betti numbers from the broken-circuit basis")
      ->add_option("--order", o.order,
                   "Comma-separated member order for broken circuits");
  CLI::App* present = single("present", "Signed presentation of the cohomology ring");
  present->add_option("--mode", o.mode, "Sign source")
      ->check(CLI::IsMember({"real", "complex"}));
  present->add_flag("--normalize-signs", o.normalize_signs,
                    "Make the first coefficient of every relation positive");
  single("kappa", "Degree-two multiplication pairing on the relation ideal");
  single("linking", "Pairwise and triple linking signs (R^4 only)");
  single("restrict", "Restrict to one member")
      ->add_option("--index", o.index, "Member name or 1-based position")
      ->required();
  CLI::App* compare = app.add_subcommand("compare", "Compare two arrangements");
  compare->add_option("files", o.inputs, "Two arrangement files")->required()->expected(2);
  compare->add_flag("--no-permutation-search", o.no_permutation_search,
                    "Do not search member relabelings");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  o.format = format == "json" ? Format::kJson : Format::kText;
  const std::string verb = app.get_subcommands().front()->get_name();

  try {
    if (verb == "validate") return RunValidate(o, out);
    if (verb == "lattice") return RunLattice(o, out, err);
    if (verb == "circuits") return RunCircuits(o, out, err);
    if (verb == "betti") return RunBetti(o, out, err);
    if (verb == "present") return RunPresent(o, out, err);
    if (verb == "kappa") return RunKappa(o, out, err);
    if (verb == "linking") return RunLinking(o, out, err);
    if (verb == "restrict") return RunRestrict(o, out, err);
    if (verb == "compare") return RunCompare(o, out, err);
  } catch (const InvalidInput&) {
    return kExitInvalid;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::kValidation:
      case ErrorKind::kDegenerateRestriction:
        return kExitInvalid;
      default:
        return kExitUsage;
    }
  }
  err << "error: unknown command '" << verb << "'\n";
  return kExitUsage;
}

}  // namespace twoarr::cli
