#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <variant>
#include <vector>

#include "neutro/error.hpp"

namespace neutro {

/// Slack allowed on the per-slot truth + indeterminacy + falsity <= 3 bound.
inline constexpr double kTripleSumTolerance = 1e-9;

enum class Flavor { svnr, inr };
enum class Bound { lower, upper };
enum class Component { truth, indet, falsity };

constexpr std::string_view to_string(Flavor f) noexcept { return f == Flavor::svnr ? "svnr" : "inr"; }
constexpr std::string_view to_string(Bound b) noexcept { return b == Bound::lower ? "lower" : "upper"; }
constexpr std::string_view to_string(Component c) noexcept {
  switch (c) {
    case Component::truth: return "truth";
    case Component::indet: return "indet";
    case Component::falsity: return "falsity";
  }
  return "?";
}

/// A membership degree in [0, 1]. Out-of-range input is rejected, never clamped.
class UnitValue {
 public:
  constexpr UnitValue() noexcept = default;
  explicit UnitValue(double v) : v_(v) {
    // Written so that NaN fails too.
    if (!(v >= 0.0 && v <= 1.0))
      throw Error(ErrorCode::range_violation, "degree " + std::to_string(v) + " outside [0,1]");
  }

  constexpr double value() const noexcept { return v_; }

  friend constexpr bool operator==(UnitValue, UnitValue) noexcept = default;
  friend constexpr auto operator<=>(UnitValue a, UnitValue b) noexcept { return a.v_ <=> b.v_; }

 private:
  double v_ = 0.0;
};

/// Closed sub-interval [lo, hi] of [0, 1].
class UnitInterval {
 public:
  constexpr UnitInterval() noexcept = default;
  UnitInterval(UnitValue lo, UnitValue hi) : lo_(lo), hi_(hi) {
    if (lo > hi)
      throw Error(ErrorCode::interval_inversion, "interval [" + std::to_string(lo.value()) + ", " +
                                                     std::to_string(hi.value()) + "] has lo > hi");
  }
  UnitInterval(double lo, double hi) : UnitInterval(UnitValue(lo), UnitValue(hi)) {}

  constexpr UnitValue lo() const noexcept { return lo_; }
  constexpr UnitValue hi() const noexcept { return hi_; }
  constexpr UnitValue endpoint(Bound b) const noexcept { return b == Bound::lower ? lo_ : hi_; }

  friend constexpr bool operator==(const UnitInterval&, const UnitInterval&) noexcept = default;

 private:
  UnitValue lo_;
  UnitValue hi_;
};

/// How a degree type is seen by the numeric engines: as a fixed-width tuple of
/// reals (one for single values, lower and upper endpoints for intervals).
template <class D>
struct degree_traits;

template <>
struct degree_traits<UnitValue> {
  static constexpr std::size_t width = 1;
  static constexpr Flavor flavor = Flavor::svnr;
  static constexpr std::array<double, 1> endpoints(UnitValue v) noexcept { return {v.value()}; }
  static UnitValue from_endpoints(std::array<double, 1> e) { return UnitValue(e[0]); }
};

template <>
struct degree_traits<UnitInterval> {
  static constexpr std::size_t width = 2;
  static constexpr Flavor flavor = Flavor::inr;
  static constexpr std::array<double, 2> endpoints(const UnitInterval& v) noexcept {
    return {v.lo().value(), v.hi().value()};
  }
  static UnitInterval from_endpoints(std::array<double, 2> e) { return UnitInterval(e[0], e[1]); }
};

template <class D>
concept Degree = requires(const D& d) {
  { degree_traits<D>::width } -> std::convertible_to<std::size_t>;
  degree_traits<D>::endpoints(d);
};

/// Truth, indeterminacy and falsity membership sequences of one universe
/// element, each of the same length p >= 1. Sequences need not be monotone.
template <Degree D>
class RefinedElement {
 public:
  using degree_type = D;

  RefinedElement(std::vector<D> truth, std::vector<D> indet, std::vector<D> falsity)
      : truth_(std::move(truth)), indet_(std::move(indet)), falsity_(std::move(falsity)) {
    validate();
  }

  std::size_t dimension() const noexcept { return truth_.size(); }

  std::span<const D> truth() const noexcept { return truth_; }
  std::span<const D> indet() const noexcept { return indet_; }
  std::span<const D> falsity() const noexcept { return falsity_; }

  std::span<const D> component(Component c) const noexcept {
    switch (c) {
      case Component::truth: return truth_;
      case Component::indet: return indet_;
      case Component::falsity: return falsity_;
    }
    return truth_;
  }

  friend bool operator==(const RefinedElement&, const RefinedElement&) = default;

 private:
  void validate() const {
    if (truth_.empty())
      throw Error(ErrorCode::dimension_mismatch, "membership sequences must have length >= 1", "truth");
    if (indet_.size() != truth_.size())
      throw Error(ErrorCode::dimension_mismatch,
                  "length " + std::to_string(indet_.size()) + " differs from truth length " +
                      std::to_string(truth_.size()),
                  "indet");
    if (falsity_.size() != truth_.size())
      throw Error(ErrorCode::dimension_mismatch,
                  "length " + std::to_string(falsity_.size()) + " differs from truth length " +
                      std::to_string(truth_.size()),
                  "falsity");
    for (std::size_t i = 0; i < truth_.size(); ++i) {
      auto t = degree_traits<D>::endpoints(truth_[i]);
      auto m = degree_traits<D>::endpoints(indet_[i]);
      auto f = degree_traits<D>::endpoints(falsity_[i]);
      for (std::size_t e = 0; e < t.size(); ++e) {
        double sum = t[e] + m[e] + f[e];
        if (sum > 3.0 + kTripleSumTolerance)
          throw Error(ErrorCode::range_violation, "triple sum " + std::to_string(sum) + " exceeds 3",
                      "slot[" + std::to_string(i) + "]");
      }
    }
  }

  std::vector<D> truth_;
  std::vector<D> indet_;
  std::vector<D> falsity_;
};

using SvnrElement = RefinedElement<UnitValue>;
using InrElement = RefinedElement<UnitInterval>;

namespace detail {

inline void check_unique_labels(std::span<const std::string> labels) {
  std::unordered_set<std::string_view> seen;
  for (const auto& l : labels)
    if (!seen.insert(l).second) throw Error(ErrorCode::duplicate_label, "label appears more than once", l);
}

}  // namespace detail

/// A refined neutrosophic set over a finite, ordered universe. Every element
/// shares the set's dimension p. Immutable once built.
template <Degree D>
class RefinedSet {
 public:
  using degree_type = D;
  using element_type = RefinedElement<D>;
  static constexpr Flavor flavor = degree_traits<D>::flavor;

  RefinedSet(std::vector<std::string> universe, std::vector<element_type> elements)
      : universe_(std::move(universe)), elements_(std::move(elements)) {
    if (universe_.empty()) throw Error(ErrorCode::dimension_mismatch, "universe must not be empty");
    if (elements_.size() != universe_.size())
      throw Error(ErrorCode::dimension_mismatch, std::to_string(universe_.size()) + " labels but " +
                                                     std::to_string(elements_.size()) + " element records");
    detail::check_unique_labels(universe_);
    p_ = elements_.front().dimension();
    for (std::size_t j = 0; j < elements_.size(); ++j)
      if (elements_[j].dimension() != p_)
        throw Error(ErrorCode::dimension_mismatch,
                    "dimension " + std::to_string(elements_[j].dimension()) + " differs from set dimension " +
                        std::to_string(p_),
                    universe_[j]);
  }

  std::size_t size() const noexcept { return universe_.size(); }
  std::size_t dimension() const noexcept { return p_; }
  std::span<const std::string> universe() const noexcept { return universe_; }
  std::span<const element_type> elements() const noexcept { return elements_; }
  const element_type& operator[](std::size_t j) const noexcept { return elements_[j]; }

  const element_type& at(std::string_view label) const {
    auto it = std::find(universe_.begin(), universe_.end(), label);
    if (it == universe_.end()) throw Error(ErrorCode::universe_mismatch, "no such label", std::string(label));
    return elements_[static_cast<std::size_t>(it - universe_.begin())];
  }

  friend bool operator==(const RefinedSet&, const RefinedSet&) = default;

 private:
  std::vector<std::string> universe_;
  std::vector<element_type> elements_;
  std::size_t p_ = 0;
};

using SvnrSet = RefinedSet<UnitValue>;
using InrSet = RefinedSet<UnitInterval>;
using AnySet = std::variant<SvnrSet, InrSet>;

/// Unvalidated input for one element: three sequences of raw reals (SVNR) or
/// raw [lo, hi] pairs (INR).
template <class T>
struct RawTriple {
  std::vector<T> truth;
  std::vector<T> indet;
  std::vector<T> falsity;
};

using RawInterval = std::array<double, 2>;

namespace detail {

template <Degree D, class Raw>
std::vector<D> convert_sequence(const std::vector<Raw>& raw, Component c) {
  std::vector<D> out;
  out.reserve(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    with_path(std::string(to_string(c)) + "[" + std::to_string(i) + "]", [&] {
      if constexpr (std::is_same_v<D, UnitValue>)
        out.emplace_back(raw[i]);
      else
        out.emplace_back(raw[i][0], raw[i][1]);
    });
  }
  return out;
}

}  // namespace detail

/// Validates and converts one raw element record.
template <Degree D, class Raw>
RefinedElement<D> make_element(const RawTriple<Raw>& raw) {
  auto t = detail::convert_sequence<D>(raw.truth, Component::truth);
  auto m = detail::convert_sequence<D>(raw.indet, Component::indet);
  auto f = detail::convert_sequence<D>(raw.falsity, Component::falsity);
  return RefinedElement<D>(std::move(t), std::move(m), std::move(f));
}

namespace detail {

template <Degree D, class Raw>
RefinedSet<D> make_set(std::vector<std::string> universe, const std::vector<RawTriple<Raw>>& records) {
  if (records.size() != universe.size())
    throw Error(ErrorCode::dimension_mismatch, std::to_string(universe.size()) + " labels but " +
                                                   std::to_string(records.size()) + " element records");
  std::vector<RefinedElement<D>> elements;
  elements.reserve(records.size());
  for (std::size_t j = 0; j < records.size(); ++j)
    elements.push_back(with_path(universe[j], [&] { return make_element<D>(records[j]); }));
  return RefinedSet<D>(std::move(universe), std::move(elements));
}

}  // namespace detail

inline SvnrSet make_svnr_set(std::vector<std::string> universe, const std::vector<RawTriple<double>>& records) {
  return detail::make_set<UnitValue>(std::move(universe), records);
}

inline InrSet make_inr_set(std::vector<std::string> universe, const std::vector<RawTriple<RawInterval>>& records) {
  return detail::make_set<UnitInterval>(std::move(universe), records);
}

/// Single-valued element taking the chosen endpoint of every interval.
inline SvnrElement project(const InrElement& e, Bound which) {
  auto pick = [which](std::span<const UnitInterval> seq) {
    std::vector<UnitValue> out;
    out.reserve(seq.size());
    for (const auto& iv : seq) out.push_back(iv.endpoint(which));
    return out;
  };
  return SvnrElement(pick(e.truth()), pick(e.indet()), pick(e.falsity()));
}

/// Lower or upper projection of an interval-valued set; universe, order and p are kept.
inline SvnrSet project(const InrSet& s, Bound which) {
  std::vector<SvnrElement> out;
  out.reserve(s.size());
  for (const auto& e : s.elements()) out.push_back(project(e, which));
  return SvnrSet({s.universe().begin(), s.universe().end()}, std::move(out));
}

inline SvnrSet project(const AnySet& s, Bound which) {
  if (const auto* inr = std::get_if<InrSet>(&s)) return project(*inr, which);
  throw Error(ErrorCode::flavor_mismatch, "projection needs an interval-valued (inr) set");
}

inline Flavor flavor_of(const AnySet& s) noexcept {
  return std::holds_alternative<SvnrSet>(s) ? Flavor::svnr : Flavor::inr;
}

}  // namespace neutro
