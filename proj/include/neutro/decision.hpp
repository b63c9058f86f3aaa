#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "neutro/core.hpp"
#include "neutro/similarity.hpp"

namespace neutro {

enum class CriterionKind { benefit, cost };
enum class Polarity { positive, negative };

constexpr std::string_view to_string(CriterionKind k) noexcept {
  return k == CriterionKind::benefit ? "benefit" : "cost";
}
constexpr std::string_view to_string(Polarity p) noexcept {
  return p == Polarity::positive ? "positive" : "negative";
}

struct CriterionSpec {
  std::string label;
  CriterionKind kind = CriterionKind::benefit;
  double weight = 0.0;

  friend bool operator==(const CriterionSpec&, const CriterionSpec&) = default;
};

/// k alternatives evaluated on r criteria; every cell is a refined element of
/// the same dimension p. Criterion weights form a valid WeightVector.
template <Degree D>
class DecisionProblem {
 public:
  using degree_type = D;
  using element_type = RefinedElement<D>;
  static constexpr Flavor flavor = degree_traits<D>::flavor;

  DecisionProblem(std::vector<std::string> alternatives, std::vector<CriterionSpec> criteria,
                  std::vector<std::vector<element_type>> matrix)
      : alternatives_(std::move(alternatives)),
        criteria_(std::move(criteria)),
        matrix_(std::move(matrix)),
        weights_(collect_weights(criteria_)) {
    if (alternatives_.empty()) throw Error(ErrorCode::dimension_mismatch, "problem has no alternatives");
    detail::check_unique_labels(alternatives_);
    std::vector<std::string> labels;
    for (const auto& c : criteria_) labels.push_back(c.label);
    detail::check_unique_labels(labels);
    if (matrix_.size() != alternatives_.size())
      throw Error(ErrorCode::dimension_mismatch, std::to_string(alternatives_.size()) + " alternatives but " +
                                                     std::to_string(matrix_.size()) + " matrix rows");
    p_ = matrix_.front().empty() ? 0 : matrix_.front().front().dimension();
    for (std::size_t a = 0; a < matrix_.size(); ++a) {
      if (matrix_[a].size() != criteria_.size())
        throw Error(ErrorCode::dimension_mismatch,
                    std::to_string(matrix_[a].size()) + " cells, expected " + std::to_string(criteria_.size()),
                    alternatives_[a]);
      for (std::size_t c = 0; c < criteria_.size(); ++c)
        if (matrix_[a][c].dimension() != p_)
          throw Error(ErrorCode::dimension_mismatch,
                      "dimension " + std::to_string(matrix_[a][c].dimension()) + " differs from " +
                          std::to_string(p_),
                      alternatives_[a] + "/" + criteria_[c].label);
    }
  }

  std::size_t alternative_count() const noexcept { return alternatives_.size(); }
  std::size_t criterion_count() const noexcept { return criteria_.size(); }
  std::size_t dimension() const noexcept { return p_; }
  std::span<const std::string> alternatives() const noexcept { return alternatives_; }
  std::span<const CriterionSpec> criteria() const noexcept { return criteria_; }
  const WeightVector& weights() const noexcept { return weights_; }
  const element_type& cell(std::size_t alt, std::size_t crit) const noexcept { return matrix_[alt][crit]; }
  std::span<const element_type> row(std::size_t alt) const noexcept { return matrix_[alt]; }

  std::vector<std::string> criterion_labels() const {
    std::vector<std::string> out;
    for (const auto& c : criteria_) out.push_back(c.label);
    return out;
  }

  /// Alternative `alt` as a refined set over the criteria.
  RefinedSet<D> alternative_set(std::size_t alt) const { return RefinedSet<D>(criterion_labels(), matrix_[alt]); }

  friend bool operator==(const DecisionProblem& a, const DecisionProblem& b) {
    return a.alternatives_ == b.alternatives_ && a.criteria_ == b.criteria_ && a.matrix_ == b.matrix_;
  }

 private:
  static WeightVector collect_weights(const std::vector<CriterionSpec>& criteria) {
    if (criteria.empty()) throw Error(ErrorCode::dimension_mismatch, "problem has no criteria");
    std::vector<double> w;
    for (const auto& c : criteria) w.push_back(c.weight);
    try {
      return WeightVector(std::move(w));
    } catch (const Error& e) {
      // Re-anchor "[j]" onto the criterion label.
      if (e.path().size() > 2 && e.path().front() == '[') {
        std::size_t j = std::stoul(e.path().substr(1));
        throw Error(e.code(), e.detail(), "criteria/" + criteria[j].label + "/weight");
      }
      throw Error(e.code(), e.detail(), "criteria/weight");
    }
  }

  std::vector<std::string> alternatives_;
  std::vector<CriterionSpec> criteria_;
  std::vector<std::vector<element_type>> matrix_;
  WeightVector weights_;
  std::size_t p_ = 0;
};

using SvnrProblem = DecisionProblem<UnitValue>;
using InrProblem = DecisionProblem<UnitInterval>;
using AnyProblem = std::variant<SvnrProblem, InrProblem>;

inline Flavor flavor_of(const AnyProblem& p) noexcept {
  return std::holds_alternative<SvnrProblem>(p) ? Flavor::svnr : Flavor::inr;
}

namespace detail {

// Slotwise, endpointwise extremum over all alternatives of one criterion column.
template <Degree D>
std::vector<D> column_extremum(const DecisionProblem<D>& problem, std::size_t crit, Component comp, bool take_max) {
  const std::size_t p = problem.dimension();
  std::vector<D> out;
  out.reserve(p);
  for (std::size_t i = 0; i < p; ++i) {
    auto acc = degree_traits<D>::endpoints(problem.cell(0, crit).component(comp)[i]);
    for (std::size_t a = 1; a < problem.alternative_count(); ++a) {
      auto e = degree_traits<D>::endpoints(problem.cell(a, crit).component(comp)[i]);
      for (std::size_t k = 0; k < acc.size(); ++k) acc[k] = take_max ? std::max(acc[k], e[k]) : std::min(acc[k], e[k]);
    }
    out.push_back(degree_traits<D>::from_endpoints(acc));
  }
  return out;
}

}  // namespace detail

/// Ideal alternative over the criteria. Positive polarity takes, per slot (and
/// per endpoint), the largest truth and smallest indeterminacy and falsity on a
/// benefit criterion, and the reverse on a cost criterion. Negative polarity
/// swaps the two rules.
template <Degree D>
RefinedSet<D> build_ideal(const DecisionProblem<D>& problem, Polarity polarity = Polarity::positive) {
  std::vector<RefinedElement<D>> cells;
  cells.reserve(problem.criterion_count());
  for (std::size_t c = 0; c < problem.criterion_count(); ++c) {
    bool favour_truth = (problem.criteria()[c].kind == CriterionKind::benefit) == (polarity == Polarity::positive);
    cells.emplace_back(detail::column_extremum(problem, c, Component::truth, favour_truth),
                       detail::column_extremum(problem, c, Component::indet, !favour_truth),
                       detail::column_extremum(problem, c, Component::falsity, !favour_truth));
  }
  return RefinedSet<D>(problem.criterion_labels(), std::move(cells));
}

template <Degree D>
struct RankingReport {
  Measure measure = Measure::jaccard;
  bool weighted = false;
  Aggregation aggregation = Aggregation::pooled;
  std::vector<SimilarityScore> scores;  // in alternative order
  std::vector<std::size_t> order;       // alternative indices, best first
  RefinedSet<D> ideal;
};

/// Scores every alternative by its similarity to the positive ideal and sorts
/// by descending score; equal scores keep alternative order.
template <Degree D>
RankingReport<D> rank(const DecisionProblem<D>& problem, Measure measure, bool weighted,
                      Aggregation agg = Aggregation::pooled) {
  RankingReport<D> report{measure, weighted, agg, {}, {}, build_ideal(problem, Polarity::positive)};
  report.scores.reserve(problem.alternative_count());
  for (std::size_t a = 0; a < problem.alternative_count(); ++a) {
    auto row = problem.alternative_set(a);
    report.scores.push_back(detail::with_path(problem.alternatives()[a], [&] {
      return weighted ? weighted_similarity(measure, report.ideal, row, problem.weights(), agg)
                      : similarity(measure, report.ideal, row, agg);
    }));
  }
  report.order.resize(problem.alternative_count());
  std::iota(report.order.begin(), report.order.end(), std::size_t{0});
  std::stable_sort(report.order.begin(), report.order.end(), [&](std::size_t x, std::size_t y) {
    return report.scores[x].value > report.scores[y].value;
  });
  return report;
}

/// Lower or upper endpoint projection of every cell of an interval-valued problem.
inline SvnrProblem project(const InrProblem& problem, Bound which) {
  std::vector<std::vector<SvnrElement>> matrix(problem.alternative_count());
  for (std::size_t a = 0; a < problem.alternative_count(); ++a)
    for (const auto& cell : problem.row(a)) matrix[a].push_back(project(cell, which));
  return SvnrProblem({problem.alternatives().begin(), problem.alternatives().end()},
                     {problem.criteria().begin(), problem.criteria().end()}, std::move(matrix));
}

}  // namespace neutro
