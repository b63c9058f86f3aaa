#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "neutro/core.hpp"

namespace neutro {

/// Absolute tolerance of subset and equality comparisons.
inline constexpr double kCompareTolerance = 1e-9;

namespace detail {

template <Degree DA, Degree DB>
void require_same_shape(const RefinedSet<DA>& a, const RefinedSet<DB>& b) {
  if (a.size() != b.size() || !std::equal(a.universe().begin(), a.universe().end(), b.universe().begin()))
    throw Error(ErrorCode::universe_mismatch, "sets must share the same universe labels in the same order");
  if (a.dimension() != b.dimension())
    throw Error(ErrorCode::dimension_mismatch, "dimensions " + std::to_string(a.dimension()) + " and " +
                                                   std::to_string(b.dimension()) + " differ");
}

// Builds a set slot by slot: fn(t_a, i_a, f_a, t_b, i_b, f_b) -> {t, i, f}.
template <class Fn>
SvnrSet slotwise(const SvnrSet& a, const SvnrSet& b, Fn fn) {
  require_same_shape(a, b);
  std::vector<SvnrElement> out;
  out.reserve(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) {
    const auto& ea = a[j];
    const auto& eb = b[j];
    std::vector<UnitValue> t, m, f;
    for (std::size_t i = 0; i < a.dimension(); ++i) {
      auto [vt, vm, vf] = fn(ea.truth()[i].value(), ea.indet()[i].value(), ea.falsity()[i].value(),
                             eb.truth()[i].value(), eb.indet()[i].value(), eb.falsity()[i].value());
      t.emplace_back(vt);
      m.emplace_back(vm);
      f.emplace_back(vf);
    }
    out.emplace_back(std::move(t), std::move(m), std::move(f));
  }
  return SvnrSet({a.universe().begin(), a.universe().end()}, std::move(out));
}

inline SvnrSet constant_set(std::vector<std::string> universe, std::size_t p, double t, double m, double f) {
  if (p == 0) throw Error(ErrorCode::dimension_mismatch, "dimension must be >= 1");
  std::vector<SvnrElement> out;
  out.reserve(universe.size());
  for (std::size_t j = 0; j < universe.size(); ++j)
    out.emplace_back(std::vector<UnitValue>(p, UnitValue(t)), std::vector<UnitValue>(p, UnitValue(m)),
                     std::vector<UnitValue>(p, UnitValue(f)));
  return SvnrSet(std::move(universe), std::move(out));
}

}  // namespace detail

/// A is contained in B: t_A <= t_B, i_A >= i_B, f_A >= f_B at every element and slot.
inline bool svnr_subset(const SvnrSet& a, const SvnrSet& b) {
  detail::require_same_shape(a, b);
  for (std::size_t j = 0; j < a.size(); ++j) {
    for (std::size_t i = 0; i < a.dimension(); ++i) {
      if (a[j].truth()[i].value() > b[j].truth()[i].value() + kCompareTolerance) return false;
      if (a[j].indet()[i].value() + kCompareTolerance < b[j].indet()[i].value()) return false;
      if (a[j].falsity()[i].value() + kCompareTolerance < b[j].falsity()[i].value()) return false;
    }
  }
  return true;
}

inline bool svnr_equal(const SvnrSet& a, const SvnrSet& b) { return svnr_subset(a, b) && svnr_subset(b, a); }

/// (t, i, f) -> (f, 1 - i, t) at every slot.
inline SvnrSet svnr_complement(const SvnrSet& a) {
  std::vector<SvnrElement> out;
  out.reserve(a.size());
  for (const auto& e : a.elements()) {
    std::vector<UnitValue> m;
    m.reserve(e.dimension());
    for (auto v : e.indet()) m.emplace_back(1.0 - v.value());
    out.emplace_back(std::vector<UnitValue>(e.falsity().begin(), e.falsity().end()), std::move(m),
                     std::vector<UnitValue>(e.truth().begin(), e.truth().end()));
  }
  return SvnrSet({a.universe().begin(), a.universe().end()}, std::move(out));
}

inline SvnrSet svnr_union(const SvnrSet& a, const SvnrSet& b) {
  return detail::slotwise(a, b, [](double ta, double ia, double fa, double tb, double ib, double fb) {
    return std::array{std::max(ta, tb), std::min(ia, ib), std::min(fa, fb)};
  });
}

inline SvnrSet svnr_intersection(const SvnrSet& a, const SvnrSet& b) {
  return detail::slotwise(a, b, [](double ta, double ia, double fa, double tb, double ib, double fb) {
    return std::array{std::min(ta, tb), std::max(ia, ib), std::max(fa, fb)};
  });
}

/// Every slot (0, 1, 1).
inline SvnrSet null_set(std::vector<std::string> universe, std::size_t p) {
  return detail::constant_set(std::move(universe), p, 0.0, 1.0, 1.0);
}

/// Every slot (1, 0, 0).
inline SvnrSet universal_set(std::vector<std::string> universe, std::size_t p) {
  return detail::constant_set(std::move(universe), p, 1.0, 0.0, 0.0);
}

}  // namespace neutro
