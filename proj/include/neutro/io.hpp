#pragma once

#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "neutro/consistency.hpp"
#include "neutro/decision.hpp"
#include "neutro/set_algebra.hpp"
#include "neutro/similarity.hpp"

// Document format (JSON, "schema": 1).
//
// Set file:
//   { "schema": 1, "flavor": "svnr" | "inr",
//     "universe": ["x1", ...],
//     "elements": [ cell, ... ],          // one per universe label
//     "weights": [w1, ...] }              // optional
//
// Problem file:
//   { "schema": 1, "flavor": "svnr" | "inr",
//     "alternatives": ["A1", ...],
//     "criteria": [ {"label": "C1", "kind": "benefit" | "cost", "weight": 0.35}, ... ],
//     "matrix": [ [cell, ...], ... ] }    // rows = alternatives, columns = criteria
//
// A cell is [truth, indet, falsity]; each is an array of p degrees
// (svnr: numbers, inr: [lo, hi] pairs).

namespace neutro::io {

using json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

struct SetDocument {
  AnySet set;
  std::optional<WeightVector> weights;
};

namespace detail {

using neutro::detail::with_path;

[[noreturn]] inline void schema_fail(const std::string& path, const std::string& what) {
  throw Error(ErrorCode::schema_error, what, path);
}

inline json parse_text(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::syntax_error, e.what());
  }
}

inline const json& field(const json& obj, const char* key, const std::string& path) {
  if (!obj.is_object()) schema_fail(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) schema_fail(path, std::string("missing field \"") + key + "\"");
  return *it;
}

inline double number(const json& v, const std::string& path) {
  if (!v.is_number()) schema_fail(path, "expected a number");
  return v.get<double>();
}

inline std::string text(const json& v, const std::string& path) {
  if (!v.is_string()) schema_fail(path, "expected a string");
  return v.get<std::string>();
}

inline const json& array(const json& v, const std::string& path) {
  if (!v.is_array()) schema_fail(path, "expected an array");
  return v;
}

inline std::vector<std::string> labels(const json& v, const std::string& path) {
  std::vector<std::string> out;
  for (std::size_t k = 0; k < array(v, path).size(); ++k)
    out.push_back(text(v[k], path + "[" + std::to_string(k) + "]"));
  return out;
}

inline Flavor flavor(const json& doc) {
  if (number(field(doc, "schema", "schema"), "schema") != kSchemaVersion)
    schema_fail("schema", "unsupported schema version (expected " + std::to_string(kSchemaVersion) + ")");
  auto f = text(field(doc, "flavor", "flavor"), "flavor");
  if (f == "svnr") return Flavor::svnr;
  if (f == "inr") return Flavor::inr;
  schema_fail("flavor", "expected \"svnr\" or \"inr\", got \"" + f + "\"");
}

template <Degree D>
RefinedElement<D> cell(const json& v, const std::string& path) {
  using Raw = std::conditional_t<std::is_same_v<D, UnitValue>, double, RawInterval>;
  if (!v.is_array() || v.size() != 3) schema_fail(path, "cell must be [truth, indet, falsity]");
  RawTriple<Raw> raw;
  std::vector<Raw>* seqs[] = {&raw.truth, &raw.indet, &raw.falsity};
  for (std::size_t c = 0; c < 3; ++c) {
    auto cpath = path + "/" + std::string(to_string(static_cast<Component>(c)));
    for (std::size_t i = 0; i < array(v[c], cpath).size(); ++i) {
      auto spath = cpath + "[" + std::to_string(i) + "]";
      const auto& s = v[c][i];
      if constexpr (std::is_same_v<D, UnitValue>) {
        seqs[c]->push_back(number(s, spath));
      } else {
        if (!s.is_array() || s.size() != 2) schema_fail(spath, "interval must be [lo, hi]");
        seqs[c]->push_back({number(s[0], spath), number(s[1], spath)});
      }
    }
  }
  return with_path(path, [&] { return make_element<D>(raw); });
}

template <Degree D>
json degree_json(const D& d) {
  if constexpr (std::is_same_v<D, UnitValue>)
    return d.value();
  else
    return json::array({d.lo().value(), d.hi().value()});
}

template <Degree D>
json cell_json(const RefinedElement<D>& e) {
  json out = json::array();
  for (auto c : {Component::truth, Component::indet, Component::falsity}) {
    json seq = json::array();
    for (const auto& d : e.component(c)) seq.push_back(degree_json(d));
    out.push_back(std::move(seq));
  }
  return out;
}

template <Degree D>
RefinedSet<D> set_body(const json& doc) {
  auto universe = labels(field(doc, "universe", "universe"), "universe");
  const auto& elems = array(field(doc, "elements", "elements"), "elements");
  if (elems.size() != universe.size())
    throw Error(ErrorCode::dimension_mismatch,
                std::to_string(universe.size()) + " labels but " + std::to_string(elems.size()) + " elements",
                "elements");
  std::vector<RefinedElement<D>> cells;
  for (std::size_t j = 0; j < elems.size(); ++j) cells.push_back(cell<D>(elems[j], universe[j]));
  return RefinedSet<D>(std::move(universe), std::move(cells));
}

template <Degree D>
DecisionProblem<D> problem_body(const json& doc) {
  auto alternatives = labels(field(doc, "alternatives", "alternatives"), "alternatives");
  const auto& crit = array(field(doc, "criteria", "criteria"), "criteria");
  std::vector<CriterionSpec> criteria;
  std::size_t with_weight = 0;
  for (std::size_t c = 0; c < crit.size(); ++c) {
    auto path = "criteria[" + std::to_string(c) + "]";
    CriterionSpec spec;
    spec.label = text(field(crit[c], "label", path), path + "/label");
    auto kind = text(field(crit[c], "kind", path), path + "/kind");
    if (kind == "benefit")
      spec.kind = CriterionKind::benefit;
    else if (kind == "cost")
      spec.kind = CriterionKind::cost;
    else
      schema_fail(path + "/kind", "expected \"benefit\" or \"cost\", got \"" + kind + "\"");
    if (crit[c].contains("weight")) {
      spec.weight = number(crit[c]["weight"], path + "/weight");
      ++with_weight;
    }
    criteria.push_back(std::move(spec));
  }
  if (with_weight == 0)
    for (auto& c : criteria) c.weight = 1.0 / double(criteria.size());
  else if (with_weight != criteria.size())
    schema_fail("criteria", "either every criterion or none must carry a weight");

  const auto& rows = array(field(doc, "matrix", "matrix"), "matrix");
  if (rows.size() != alternatives.size())
    throw Error(ErrorCode::dimension_mismatch,
                std::to_string(alternatives.size()) + " alternatives but " + std::to_string(rows.size()) + " rows",
                "matrix");
  std::vector<std::vector<RefinedElement<D>>> matrix(rows.size());
  for (std::size_t a = 0; a < rows.size(); ++a) {
    const auto& row = array(rows[a], alternatives[a]);
    if (row.size() != criteria.size())
      throw Error(ErrorCode::dimension_mismatch,
                  std::to_string(row.size()) + " cells, expected " + std::to_string(criteria.size()),
                  alternatives[a]);
    for (std::size_t c = 0; c < row.size(); ++c)
      matrix[a].push_back(cell<D>(row[c], alternatives[a] + "/" + criteria[c].label));
  }
  return DecisionProblem<D>(std::move(alternatives), std::move(criteria), std::move(matrix));
}

}  // namespace detail

/// Parses and validates a problem document. Errors carry the matrix path
/// ("alternative/criterion/component[slot]") of the offending value.
inline AnyProblem parse_problem(std::string_view text) {
  auto doc = detail::parse_text(text);
  if (detail::flavor(doc) == Flavor::svnr) return detail::problem_body<UnitValue>(doc);
  return detail::problem_body<UnitInterval>(doc);
}

inline SetDocument parse_set(std::string_view text) {
  auto doc = detail::parse_text(text);
  SetDocument out{detail::flavor(doc) == Flavor::svnr ? AnySet(detail::set_body<UnitValue>(doc))
                                                      : AnySet(detail::set_body<UnitInterval>(doc)),
                  std::nullopt};
  if (doc.contains("weights")) {
    std::vector<double> w;
    const auto& arr = detail::array(doc["weights"], "weights");
    for (std::size_t k = 0; k < arr.size(); ++k)
      w.push_back(detail::number(arr[k], "weights[" + std::to_string(k) + "]"));
    out.weights = detail::with_path("weights", [&] { return WeightVector(std::move(w)); });
  }
  return out;
}

template <Degree D>
json to_json(const RefinedSet<D>& s) {
  json elems = json::array();
  for (const auto& e : s.elements()) elems.push_back(detail::cell_json(e));
  return {{"schema", kSchemaVersion},
          {"flavor", to_string(RefinedSet<D>::flavor)},
          {"universe", std::vector<std::string>(s.universe().begin(), s.universe().end())},
          {"elements", std::move(elems)}};
}

inline json to_json(const SetDocument& d) {
  json out = std::visit([](const auto& s) { return to_json(s); }, d.set);
  if (d.weights) out["weights"] = std::vector<double>(d.weights->values().begin(), d.weights->values().end());
  return out;
}

template <Degree D>
json to_json(const DecisionProblem<D>& p) {
  json criteria = json::array();
  for (const auto& c : p.criteria())
    criteria.push_back({{"label", c.label}, {"kind", to_string(c.kind)}, {"weight", c.weight}});
  json matrix = json::array();
  for (std::size_t a = 0; a < p.alternative_count(); ++a) {
    json row = json::array();
    for (const auto& cell : p.row(a)) row.push_back(detail::cell_json(cell));
    matrix.push_back(std::move(row));
  }
  return {{"schema", kSchemaVersion},
          {"flavor", to_string(DecisionProblem<D>::flavor)},
          {"alternatives", std::vector<std::string>(p.alternatives().begin(), p.alternatives().end())},
          {"criteria", std::move(criteria)},
          {"matrix", std::move(matrix)}};
}

inline json to_json(const AnyProblem& p) {
  return std::visit([](const auto& x) { return to_json(x); }, p);
}

// ---------------------------------------------------------------------------
// Reports

inline std::string fixed5(double v) {
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os << std::fixed << std::setprecision(5) << v;
  return os.str();
}

inline std::string variant_name(Measure m, bool weighted) {
  return (weighted ? "weighted " : "") + std::string(to_string(m));
}

template <Degree D>
std::string ordering_line(const RankingReport<D>& r, std::span<const std::string> alternatives) {
  std::string line;
  for (std::size_t k = 0; k < r.order.size(); ++k) {
    if (k) line += " > ";
    line += alternatives[r.order[k]];
  }
  return line;
}

template <Degree D>
json ranking_json(const RankingReport<D>& r, std::span<const std::string> alternatives) {
  json scores = json::array();
  for (std::size_t a = 0; a < r.scores.size(); ++a)
    scores.push_back({{"alternative", alternatives[a]}, {"score", r.scores[a].value}});
  json order = json::array();
  for (auto a : r.order) order.push_back(alternatives[a]);
  return {{"measure", to_string(r.measure)},
          {"weighted", r.weighted},
          {"aggregation", to_string(r.aggregation)},
          {"scores", std::move(scores)},
          {"order", std::move(order)},
          {"ideal", to_json(r.ideal)}};
}

template <Degree D>
void write_ranking_table(std::ostream& os, const RankingReport<D>& r, std::span<const std::string> alternatives) {
  os << "measure: " << variant_name(r.measure, r.weighted) << " (" << to_string(r.aggregation) << ")\n";
  std::size_t width = 13;
  for (const auto& a : alternatives) width = std::max(width, a.size() + 2);
  os << std::left << std::setw(int(width)) << "alternative" << "score\n";
  for (std::size_t a = 0; a < r.scores.size(); ++a)
    os << std::left << std::setw(int(width)) << alternatives[a] << fixed5(r.scores[a].value) << "\n";
  os << "ranking: " << ordering_line(r, alternatives) << "\n";
}

template <Degree D>
void write_set_table(std::ostream& os, const RefinedSet<D>& s) {
  for (std::size_t j = 0; j < s.size(); ++j) {
    os << s.universe()[j] << ": ";
    bool first_comp = true;
    for (auto c : {Component::truth, Component::indet, Component::falsity}) {
      if (!first_comp) os << ", ";
      first_comp = false;
      os << "(";
      bool first = true;
      for (const auto& d : s[j].component(c)) {
        if (!first) os << ", ";
        first = false;
        if constexpr (std::is_same_v<D, UnitValue>)
          os << d.value();
        else
          os << "[" << d.lo().value() << ", " << d.hi().value() << "]";
      }
      os << ")";
    }
    os << "\n";
  }
}

inline json consistency_json(const ConsistencyReport& r) {
  json entries = json::array();
  for (const auto& e : r.entries)
    entries.push_back({{"measure", to_string(e.variant.measure)},
                       {"weighted", e.variant.weighted},
                       {"lower", e.lower},
                       {"upper", e.upper},
                       {"consistency", e.degree}});
  const auto& s = r.selected_entry().variant;
  return {{"objective", to_string(r.objective)},
          {"entries", std::move(entries)},
          {"selected", {{"measure", to_string(s.measure)}, {"weighted", s.weighted}}}};
}

inline void write_consistency_table(std::ostream& os, const ConsistencyReport& r,
                                    std::span<const std::string> alternatives) {
  for (const auto& e : r.entries) {
    os << variant_name(e.variant.measure, e.variant.weighted) << "\n";
    os << "  " << std::left << std::setw(12) << "alternative" << std::setw(10) << "lower" << "upper\n";
    for (std::size_t a = 0; a < e.lower.size(); ++a)
      os << "  " << std::left << std::setw(12) << alternatives[a] << std::setw(10) << fixed5(e.lower[a])
         << fixed5(e.upper[a]) << "\n";
    os << "  consistency: " << fixed5(e.degree) << "\n";
  }
}

}  // namespace neutro::io
