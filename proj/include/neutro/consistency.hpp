#pragma once

#include <cmath>
#include <span>
#include <string>
#include <vector>

#include "neutro/decision.hpp"

namespace neutro {

/// Which consistency degree wins the measure selection. The default keeps the
/// published rule (largest degree); `minimize` prefers the smallest gap between
/// the lower and upper projections.
enum class Objective { maximize, minimize };

constexpr std::string_view to_string(Objective o) noexcept {
  return o == Objective::maximize ? "maximize" : "minimize";
}

struct MeasureVariant {
  Measure measure = Measure::jaccard;
  bool weighted = false;

  friend bool operator==(const MeasureVariant&, const MeasureVariant&) = default;
};

inline std::string to_string(const MeasureVariant& v) {
  return (v.weighted ? "weighted " : "") + std::string(to_string(v.measure));
}

struct ConsistencyEntry {
  MeasureVariant variant;
  std::vector<double> lower;  // similarity of each alternative to the ideal, lower projection
  std::vector<double> upper;  // same on the upper projection
  double degree = 0.0;        // mean |lower - upper| over alternatives
};

struct ConsistencyReport {
  std::vector<ConsistencyEntry> entries;  // in candidate order
  std::size_t selected = 0;               // index into entries
  Objective objective = Objective::maximize;

  const ConsistencyEntry& selected_entry() const { return entries.at(selected); }
};

/// Scores each alternative against the ideal built separately on the lower and
/// upper endpoint projections, and averages the absolute score gap.
inline ConsistencyEntry evaluate_consistency(const InrProblem& problem, MeasureVariant variant,
                                             Aggregation agg = Aggregation::pooled) {
  ConsistencyEntry entry{variant, {}, {}, 0.0};
  auto lower = rank(project(problem, Bound::lower), variant.measure, variant.weighted, agg);
  auto upper = rank(project(problem, Bound::upper), variant.measure, variant.weighted, agg);
  detail::CompensatedSum gap;
  for (std::size_t a = 0; a < problem.alternative_count(); ++a) {
    entry.lower.push_back(lower.scores[a].value);
    entry.upper.push_back(upper.scores[a].value);
    gap.add(std::abs(entry.lower.back() - entry.upper.back()));
  }
  entry.degree = gap.value() / double(problem.alternative_count());
  return entry;
}

inline double consistency_degree(const InrProblem& problem, Measure measure, bool weighted,
                                 Aggregation agg = Aggregation::pooled) {
  return evaluate_consistency(problem, {measure, weighted}, agg).degree;
}

inline double consistency_degree(const AnyProblem& problem, Measure measure, bool weighted,
                                 Aggregation agg = Aggregation::pooled) {
  if (const auto* inr = std::get_if<InrProblem>(&problem)) return consistency_degree(*inr, measure, weighted, agg);
  throw Error(ErrorCode::flavor_mismatch, "consistency analysis needs an interval-valued (inr) problem");
}

/// Evaluates every candidate and selects the best by `objective`; ties go to
/// the earliest candidate.
inline ConsistencyReport select_measure(const InrProblem& problem, std::span<const MeasureVariant> candidates,
                                        Objective objective = Objective::maximize,
                                        Aggregation agg = Aggregation::pooled) {
  if (candidates.empty()) throw Error(ErrorCode::schema_error, "no candidate measures given");
  ConsistencyReport report{{}, 0, objective};
  for (const auto& c : candidates) report.entries.push_back(evaluate_consistency(problem, c, agg));
  for (std::size_t k = 1; k < report.entries.size(); ++k) {
    double best = report.entries[report.selected].degree;
    double cur = report.entries[k].degree;
    if (objective == Objective::maximize ? cur > best : cur < best) report.selected = k;
  }
  return report;
}

inline ConsistencyReport select_measure(const AnyProblem& problem, std::span<const MeasureVariant> candidates,
                                        Objective objective = Objective::maximize,
                                        Aggregation agg = Aggregation::pooled) {
  if (const auto* inr = std::get_if<InrProblem>(&problem)) return select_measure(*inr, candidates, objective, agg);
  throw Error(ErrorCode::flavor_mismatch, "consistency analysis needs an interval-valued (inr) problem");
}

}  // namespace neutro
