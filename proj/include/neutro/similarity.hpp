#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "neutro/core.hpp"
#include "neutro/set_algebra.hpp"

namespace neutro {

enum class Measure { jaccard, dice, cosine };

constexpr std::string_view to_string(Measure m) noexcept {
  switch (m) {
    case Measure::jaccard: return "jaccard";
    case Measure::dice: return "dice";
    case Measure::cosine: return "cosine";
  }
  return "?";
}

inline constexpr std::array kAllMeasures{Measure::jaccard, Measure::dice, Measure::cosine};

/// How the p slots of one universe element are combined.
///
/// `pooled`: the element's truth, indeterminacy and falsity sequences (both
/// endpoints for intervals) form one vector; products and squares are summed
/// over all slots before the Jaccard/Dice/Cosine ratio is taken. This is the
/// form that reproduces the published decision tables.
///
/// `slotwise`: the ratio is taken per slot and the p ratios are averaged.
///
/// Both give identical results for p = 1, and both lie in [0, 1].
enum class Aggregation { pooled, slotwise };

constexpr std::string_view to_string(Aggregation a) noexcept {
  return a == Aggregation::pooled ? "pooled" : "slotwise";
}

/// Tolerance on the unit sum of a weight vector.
inline constexpr double kWeightSumTolerance = 1e-6;

/// Non-negative per-element weights summing to one.
class WeightVector {
 public:
  explicit WeightVector(std::vector<double> w) : w_(std::move(w)) {
    if (w_.empty()) throw Error(ErrorCode::weight_error, "weight vector is empty");
    double sum = 0.0;
    for (std::size_t j = 0; j < w_.size(); ++j) {
      if (!(w_[j] >= 0.0) || !std::isfinite(w_[j]))
        throw Error(ErrorCode::weight_error, "weight " + std::to_string(w_[j]) + " is negative or not finite",
                    "[" + std::to_string(j) + "]");
      sum += w_[j];
    }
    if (std::abs(sum - 1.0) > kWeightSumTolerance)
      throw Error(ErrorCode::weight_error, "weights sum to " + std::to_string(sum) + ", expected 1");
  }

  static WeightVector uniform(std::size_t n) { return WeightVector(std::vector<double>(n, 1.0 / double(n))); }

  std::size_t size() const noexcept { return w_.size(); }
  double operator[](std::size_t j) const noexcept { return w_[j]; }
  std::span<const double> values() const noexcept { return w_; }

 private:
  std::vector<double> w_;
};

struct SimilarityScore {
  double value = 0.0;
  Measure measure = Measure::jaccard;
  bool weighted = false;
};

namespace detail {

// Neumaier-compensated running sum; terms are added in caller order.
class CompensatedSum {
 public:
  void add(double x) noexcept {
    double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x))
      c_ += (sum_ - t) + x;
    else
      c_ += (x - t) + sum_;
    sum_ = t;
  }
  double value() const noexcept { return sum_ + c_; }

 private:
  double sum_ = 0.0;
  double c_ = 0.0;
};

// Inner product and squared norms of two equally long vectors.
struct Moments {
  CompensatedSum ab, aa, bb;
};

inline double ratio(Measure m, double ab, double aa, double bb) noexcept {
  switch (m) {
    case Measure::jaccard: {
      double den = aa + bb - ab;
      return ab == 0.0 ? 0.0 : ab / den;
    }
    case Measure::dice:
      return ab == 0.0 ? 0.0 : 2.0 * ab / (aa + bb);
    case Measure::cosine:
      if (aa == 0.0 || bb == 0.0) return 0.0;
      return std::min(1.0, ab / (std::sqrt(aa) * std::sqrt(bb)));
  }
  return 0.0;
}

template <Degree D>
void accumulate_slot(Moments& mom, const RefinedElement<D>& a, const RefinedElement<D>& b, std::size_t i) {
  // Endpoint-major order: all lower endpoints (t, i, f), then all upper ones.
  for (std::size_t e = 0; e < degree_traits<D>::width; ++e) {
    for (auto c : {Component::truth, Component::indet, Component::falsity}) {
      double x = degree_traits<D>::endpoints(a.component(c)[i])[e];
      double y = degree_traits<D>::endpoints(b.component(c)[i])[e];
      mom.ab.add(x * y);
      mom.aa.add(x * x);
      mom.bb.add(y * y);
    }
  }
}

template <Degree D>
bool slot_is_zero(const RefinedElement<D>& a, std::size_t i) {
  for (auto c : {Component::truth, Component::indet, Component::falsity})
    for (double v : degree_traits<D>::endpoints(a.component(c)[i]))
      if (v != 0.0) return false;
  return true;
}

// Per-element similarity term; in [0, 1].
template <Degree D>
double element_term(Measure m, const RefinedElement<D>& a, const RefinedElement<D>& b, Aggregation agg) {
  const std::size_t p = a.dimension();
  for (std::size_t i = 0; i < p; ++i)
    if (slot_is_zero(a, i) && slot_is_zero(b, i))
      throw Error(ErrorCode::undefined_similarity, "both sets have t = i = f = 0 at this slot",
                  "[" + std::to_string(i) + "]");

  if (agg == Aggregation::pooled) {
    Moments mom;
    for (std::size_t i = 0; i < p; ++i) accumulate_slot(mom, a, b, i);
    return ratio(m, mom.ab.value(), mom.aa.value(), mom.bb.value());
  }
  CompensatedSum s;
  for (std::size_t i = 0; i < p; ++i) {
    Moments mom;
    accumulate_slot(mom, a, b, i);
    s.add(ratio(m, mom.ab.value(), mom.aa.value(), mom.bb.value()));
  }
  return s.value() / double(p);
}

template <Degree D, class WeightOf>
double aggregate(Measure m, const RefinedSet<D>& a, const RefinedSet<D>& b, Aggregation agg, WeightOf weight_of) {
  require_same_shape(a, b);
  CompensatedSum total;
  for (std::size_t j = 0; j < a.size(); ++j) {
    double term = with_path(a.universe()[j], [&] { return element_term(m, a[j], b[j], agg); });
    total.add(weight_of(j) * term);
  }
  return total.value();
}

}  // namespace detail

/// Jaccard, Dice or Cosine similarity of two sets over the same universe,
/// averaging element terms with weight 1/n.
///
/// Throws UniverseMismatch / DimensionMismatch for incompatible sets and
/// UndefinedSimilarity when both sets are all-zero at some element slot.
template <Degree D>
SimilarityScore similarity(Measure m, const RefinedSet<D>& a, const RefinedSet<D>& b,
                           Aggregation agg = Aggregation::pooled) {
  double v = detail::aggregate(m, a, b, agg, [](std::size_t) { return 1.0; });
  return {v / double(a.size()), m, false};
}

/// Weighted variant: element terms are combined with w_j instead of 1/n.
template <Degree D>
SimilarityScore weighted_similarity(Measure m, const RefinedSet<D>& a, const RefinedSet<D>& b,
                                    const WeightVector& w, Aggregation agg = Aggregation::pooled) {
  if (w.size() != a.size())
    throw Error(ErrorCode::weight_error,
                std::to_string(w.size()) + " weights for " + std::to_string(a.size()) + " universe elements");
  double v = detail::aggregate(m, a, b, agg, [&w](std::size_t j) { return w[j]; });
  return {v, m, true};
}

inline SimilarityScore svnr_similarity(Measure m, const SvnrSet& a, const SvnrSet& b,
                                       Aggregation agg = Aggregation::pooled) {
  return similarity(m, a, b, agg);
}

inline SimilarityScore svnr_weighted_similarity(Measure m, const SvnrSet& a, const SvnrSet& b,
                                                const WeightVector& w, Aggregation agg = Aggregation::pooled) {
  return weighted_similarity(m, a, b, w, agg);
}

inline SimilarityScore inr_similarity(Measure m, const InrSet& a, const InrSet& b,
                                      Aggregation agg = Aggregation::pooled) {
  return similarity(m, a, b, agg);
}

inline SimilarityScore inr_weighted_similarity(Measure m, const InrSet& a, const InrSet& b, const WeightVector& w,
                                               Aggregation agg = Aggregation::pooled) {
  return weighted_similarity(m, a, b, w, agg);
}

/// Flavor-checked dispatch for sets whose flavor is only known at run time.
inline SimilarityScore similarity(Measure m, const AnySet& a, const AnySet& b, const WeightVector* w = nullptr,
                                  Aggregation agg = Aggregation::pooled) {
  if (a.index() != b.index())
    throw Error(ErrorCode::flavor_mismatch, "cannot compare an " + std::string(to_string(flavor_of(a))) +
                                                " set with an " + std::string(to_string(flavor_of(b))) + " set");
  return std::visit(
      [&](const auto& sa) -> SimilarityScore {
        using S = std::decay_t<decltype(sa)>;
        const auto& sb = std::get<S>(b);
        return w ? weighted_similarity(m, sa, sb, *w, agg) : similarity(m, sa, sb, agg);
      },
      a);
}

}  // namespace neutro
