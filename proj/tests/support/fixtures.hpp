#pragma once

// Worked-example data used across the suites, kept as plain numbers so the
// oracle can consume it without going through the library types.

#include <array>
#include <string>
#include <vector>

#include "neutro/decision.hpp"

namespace fixture {

using Seq = std::vector<double>;
using Cell = std::array<Seq, 3>;  // truth, indet, falsity
using Interval = std::array<double, 2>;
using ICell = std::array<std::vector<Interval>, 3>;

inline const std::vector<std::string> kUniverse{"x1", "x2", "x3"};
inline const std::vector<std::string> kAlternatives{"A1", "A2", "A3", "A4"};
inline const std::vector<std::string> kCriteria{"C1", "C2", "C3"};
inline const std::vector<double> kSetWeights{0.7, 0.2, 0.1};
inline const std::vector<double> kCriterionWeights{0.35, 0.25, 0.40};

inline Cell cell(Seq t, Seq i, Seq f) { return {std::move(t), std::move(i), std::move(f)}; }
inline ICell icell(std::vector<Interval> t, std::vector<Interval> i, std::vector<Interval> f) {
  return {std::move(t), std::move(i), std::move(f)};
}

inline const std::vector<Cell> kSetA{
    cell({.1, .2, .4}, {.1, .4, .6}, {.0, .3, .3}),
    cell({.3, .3, .5}, {.2, .3, .7}, {.1, .5, .6}),
    cell({.2, .4, .8}, {.1, .3, .3}, {.5, .6, .9}),
};
inline const std::vector<Cell> kSetB{
    cell({.5, .6, .7}, {.4, .6, .7}, {.3, .3, .4}),
    cell({.2, .4, .4}, {.2, .5, .8}, {.2, .6, .7}),
    cell({.1, .6, .6}, {.1, .5, .5}, {.3, .4, .7}),
};
inline const std::vector<Cell> kSetC{
    cell({.3, .3, .5}, {.4, .5, .6}, {.1, .3, .4}),
    cell({.0, .1, .3}, {.2, .3, .6}, {.1, .4, .6}),
    cell({.1, .4, .7}, {.1, .3, .4}, {.3, .3, .5}),
};

// Single-valued decision matrix, rows A1..A4, columns C1..C3.
inline const std::vector<std::vector<Cell>> kMatrix1{
    {cell({.1, .2, .4}, {.3, .3, .5}, {.2, .4, .8}), cell({.1, .4, .6}, {.2, .3, .7}, {.1, .3, .3}),
     cell({.0, .3, .3}, {.1, .5, .6}, {.5, .6, .9})},
    {cell({.5, .6, .7}, {.2, .4, .4}, {.1, .6, .6}), cell({.4, .6, .7}, {.2, .5, .8}, {.1, .5, .5}),
     cell({.3, .3, .4}, {.2, .6, .7}, {.3, .4, .7})},
    {cell({.3, .3, .5}, {.0, .1, .3}, {.1, .4, .7}), cell({.4, .5, .6}, {.2, .3, .6}, {.1, .3, .4}),
     cell({.1, .3, .4}, {.1, .4, .6}, {.3, .3, .5})},
    {cell({.2, .4, .9}, {.1, .5, .6}, {.3, .5, .1}), cell({.0, .2, .4}, {.1, .5, .7}, {.6, .7, .9}),
     cell({.8, .8, .9}, {.3, .4, .4}, {.6, .6, .8})},
};

// Interval-valued decision matrix. Two truth entries of the C3 column are
// printed as "[.3, 9]" and "[.3, 5]" in the source; they are read as .9 and .5.
inline const std::vector<std::vector<ICell>> kMatrix2{
    {icell({{.2, .3}, {.2, .5}, {.4, .7}}, {{.3, .4}, {.3, .6}, {.5, .9}}, {{.2, .5}, {.4, .7}, {.8, .8}}),
     icell({{.1, .5}, {.4, .5}, {.6, 1}}, {{.2, .4}, {.3, .7}, {.7, .8}}, {{.1, .2}, {.3, .8}, {.3, .8}}),
     icell({{.0, .3}, {.3, .5}, {.3, .9}}, {{.1, .2}, {.5, .6}, {.6, .6}}, {{.5, .5}, {.6, .7}, {.9, .9}})},
    {icell({{.1, .2}, {.2, .8}, {.4, .8}}, {{.4, .5}, {.3, .6}, {.5, .7}}, {{.1, .3}, {.4, .5}, {.8, .8}}),
     icell({{.1, .4}, {.4, .5}, {.6, .6}}, {{.2, .3}, {.3, .4}, {.7, .8}}, {{.1, .5}, {.3, .6}, {.3, .7}}),
     icell({{.0, .3}, {.3, .4}, {.3, .5}}, {{.1, .6}, {.5, .6}, {.6, .7}}, {{.5, .8}, {.6, .8}, {.9, 1}})},
    {icell({{.1, .4}, {.2, .5}, {.4, .6}}, {{.3, .4}, {.3, .4}, {.6, .7}}, {{.2, .3}, {.4, .5}, {.8, 1}}),
     icell({{.2, .3}, {.4, .5}, {.6, .7}}, {{.2, .5}, {.3, .6}, {.7, .8}}, {{.1, .2}, {.3, .4}, {.4, .5}}),
     icell({{.0, .1}, {.3, .3}, {.3, .4}}, {{.1, .2}, {.5, .6}, {.6, .7}}, {{.5, .6}, {.6, .7}, {.9, .9}})},
    {icell({{.1, .4}, {.2, .4}, {.4, .4}}, {{.3, .5}, {.3, .6}, {.5, .6}}, {{.2, .5}, {.4, .6}, {.8, .9}}),
     icell({{.1, .5}, {.4, .5}, {.4, .6}}, {{.2, .4}, {.3, .5}, {.7, .9}}, {{.2, .2}, {.3, .4}, {.3, .4}}),
     icell({{.0, .2}, {.3, .4}, {.3, .5}}, {{.1, .4}, {.5, .6}, {.6, .8}}, {{.5, .6}, {.6, .7}, {.9, 1}})},
};

// C1, C2 benefit; C3 cost.
inline const std::vector<bool> kIsBenefit{true, true, false};

inline neutro::RawTriple<double> raw(const Cell& c) { return {c[0], c[1], c[2]}; }

inline neutro::RawTriple<neutro::RawInterval> raw(const ICell& c) {
  neutro::RawTriple<neutro::RawInterval> out;
  std::vector<neutro::RawInterval>* dst[] = {&out.truth, &out.indet, &out.falsity};
  for (std::size_t k = 0; k < 3; ++k)
    for (const auto& iv : c[k]) dst[k]->push_back({iv[0], iv[1]});
  return out;
}

inline neutro::SvnrSet svnr_set(const std::vector<Cell>& cells,
                                const std::vector<std::string>& universe = kUniverse) {
  std::vector<neutro::RawTriple<double>> records;
  for (const auto& c : cells) records.push_back(raw(c));
  return neutro::make_svnr_set(universe, records);
}

inline std::vector<neutro::CriterionSpec> criteria() {
  std::vector<neutro::CriterionSpec> out;
  for (std::size_t c = 0; c < kCriteria.size(); ++c)
    out.push_back({kCriteria[c], kIsBenefit[c] ? neutro::CriterionKind::benefit : neutro::CriterionKind::cost,
                   kCriterionWeights[c]});
  return out;
}

template <neutro::Degree D, class M>
neutro::DecisionProblem<D> problem(const M& matrix) {
  std::vector<std::vector<neutro::RefinedElement<D>>> cells;
  for (const auto& row : matrix) {
    cells.emplace_back();
    for (const auto& c : row) cells.back().push_back(neutro::make_element<D>(raw(c)));
  }
  return neutro::DecisionProblem<D>(kAlternatives, criteria(), std::move(cells));
}

inline neutro::SvnrProblem problem1() { return problem<neutro::UnitValue>(kMatrix1); }
inline neutro::InrProblem problem2() { return problem<neutro::UnitInterval>(kMatrix2); }

}  // namespace fixture
