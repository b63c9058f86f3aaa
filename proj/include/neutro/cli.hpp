#pragma once

#include <algorithm>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "neutro/io.hpp"

namespace neutro::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDataError = 1;
inline constexpr int kExitUsageError = 2;

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::syntax_error, "cannot read file", path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::vector<Measure> measures_for(const std::string& name) {
  if (name == "all") return {kAllMeasures.begin(), kAllMeasures.end()};
  for (auto m : kAllMeasures)
    if (to_string(m) == name) return {m};
  return {};
}

inline const std::map<std::string, Aggregation> kAggregations{{"pooled", Aggregation::pooled},
                                                              {"slotwise", Aggregation::slotwise}};
inline const std::map<std::string, Polarity> kPolarities{{"positive", Polarity::positive},
                                                         {"negative", Polarity::negative}};
inline const std::map<std::string, Objective> kObjectives{{"maximize", Objective::maximize},
                                                          {"minimize", Objective::minimize}};

struct Common {
  std::string measure = "all";
  std::string format = "table";
  std::string aggregation_name = "pooled";
  Aggregation aggregation = Aggregation::pooled;
};

inline void add_common(CLI::App* sub, Common& c, bool with_measure = true) {
  if (with_measure)
    sub->add_option("--measure", c.measure, "jaccard, dice, cosine or all")
        ->check(CLI::IsMember({"jaccard", "dice", "cosine", "all"}))
        ->capture_default_str();
  sub->add_option("--format", c.format, "table or json")
      ->check(CLI::IsMember({"table", "json"}))
      ->capture_default_str();
  sub->add_option("--aggregation", c.aggregation_name, "pooled (default) or slotwise")
      ->check(CLI::IsMember({"pooled", "slotwise"}));
}

inline SvnrSet require_svnr(const AnySet& s, const std::string& name) {
  if (const auto* v = std::get_if<SvnrSet>(&s)) return *v;
  throw Error(ErrorCode::flavor_mismatch, "set algebra is defined on svnr sets only", name);
}

inline int run_similarity(const Common& c, const std::string& file_a, const std::string& file_b, bool weighted,
                          const std::vector<double>& weight_list, std::ostream& out) {
  auto a = neutro::detail::with_path(file_a, [&] { return io::parse_set(read_file(file_a)); });
  auto b = neutro::detail::with_path(file_b, [&] { return io::parse_set(read_file(file_b)); });
  std::optional<WeightVector> w;
  if (!weight_list.empty())
    w = neutro::detail::with_path("--weights", [&] { return WeightVector(weight_list); });
  else if (weighted) {
    if (a.weights)
      w = a.weights;
    else if (b.weights)
      w = b.weights;
    else
      throw Error(ErrorCode::weight_error, "--weighted needs --weights or a \"weights\" field in a set file");
  }
  std::vector<SimilarityScore> results;
  io::json scores = io::json::object();
  for (auto m : measures_for(c.measure)) {
    results.push_back(similarity(m, a.set, b.set, w ? &*w : nullptr, c.aggregation));
    scores[std::string(to_string(m))] = results.back().value;
  }
  if (c.format == "json") {
    out << io::json{{"flavor", to_string(flavor_of(a.set))},
                    {"aggregation", to_string(c.aggregation)},
                    {"weighted", w.has_value()},
                    {"scores", scores}}
               .dump(2)
        << "\n";
  } else {
    for (const auto& r : results)
      out << io::variant_name(r.measure, r.weighted) << ": " << io::fixed5(r.value) << "\n";
  }
  return kExitOk;
}

inline int run_rank(const Common& c, const std::string& file, bool weighted, std::optional<Polarity> polarity,
                    std::ostream& out) {
  auto problem = neutro::detail::with_path(file, [&] { return io::parse_problem(read_file(file)); });
  return std::visit(
      [&](const auto& p) {
        io::json rankings = io::json::array();
        bool first = true;
        for (auto m : measures_for(c.measure)) {
          auto report = rank(p, m, weighted, c.aggregation);
          if (c.format == "json") {
            rankings.push_back(io::ranking_json(report, p.alternatives()));
          } else {
            if (!first) out << "\n";
            io::write_ranking_table(out, report, p.alternatives());
          }
          first = false;
        }
        if (c.format == "json") {
          io::json doc{{"rankings", std::move(rankings)}};
          if (polarity)
            doc["inspected_ideal"] = {{"polarity", to_string(*polarity)},
                                      {"set", io::to_json(build_ideal(p, *polarity))}};
          out << doc.dump(2) << "\n";
        } else if (polarity) {
          out << "\nideal (" << to_string(*polarity) << "):\n";
          io::write_set_table(out, build_ideal(p, *polarity));
        }
        return kExitOk;
      },
      problem);
}

inline int run_consistency(const Common& c, const std::string& file, Objective objective, std::ostream& out) {
  auto problem = neutro::detail::with_path(file, [&] { return io::parse_problem(read_file(file)); });
  std::vector<MeasureVariant> plain, weighted;
  for (auto m : measures_for(c.measure)) {
    plain.push_back({m, false});
    weighted.push_back({m, true});
  }
  auto rp = select_measure(problem, plain, objective, c.aggregation);
  auto rw = select_measure(problem, weighted, objective, c.aggregation);
  const auto& alts = std::get<InrProblem>(problem).alternatives();
  if (c.format == "json") {
    out << io::json{{"aggregation", to_string(c.aggregation)},
                    {"unweighted", io::consistency_json(rp)},
                    {"weighted", io::consistency_json(rw)}}
               .dump(2)
        << "\n";
  } else {
    io::write_consistency_table(out, rp, alts);
    io::write_consistency_table(out, rw, alts);
    out << "objective: " << to_string(objective) << "\n";
    out << "selected: " << to_string(rp.selected_entry().variant) << "\n";
    out << "selected (weighted): " << to_string(rw.selected_entry().variant) << "\n";
  }
  return kExitOk;
}

inline int run_ops(const Common& c, const std::string& op, const std::string& file_a, const std::string& file_b,
                   std::ostream& out) {
  auto a = require_svnr(
      neutro::detail::with_path(file_a, [&] { return io::parse_set(read_file(file_a)); }).set, file_a);
  auto load_b = [&] {
    if (file_b.empty()) throw Error(ErrorCode::schema_error, "operation '" + op + "' needs two set files");
    return require_svnr(
        neutro::detail::with_path(file_b, [&] { return io::parse_set(read_file(file_b)); }).set, file_b);
  };
  auto emit_set = [&](const SvnrSet& s) {
    if (c.format == "json")
      out << io::to_json(s).dump(2) << "\n";
    else
      io::write_set_table(out, s);
  };
  auto emit_bool = [&](bool v) {
    if (c.format == "json")
      out << io::json{{"operation", op}, {"result", v}}.dump(2) << "\n";
    else
      out << op << ": " << (v ? "true" : "false") << "\n";
  };
  if (op == "complement") {
    emit_set(svnr_complement(a));
  } else if (op == "union") {
    emit_set(svnr_union(a, load_b()));
  } else if (op == "intersection") {
    emit_set(svnr_intersection(a, load_b()));
  } else if (op == "subset") {
    emit_bool(svnr_subset(a, load_b()));
  } else {
    emit_bool(svnr_equal(a, load_b()));
  }
  return kExitOk;
}

}  // namespace detail

/// Runs one CLI invocation. `args` excludes the program name. Returns 0 on
/// success, 1 on data or validation errors, 2 on usage errors.
inline int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Similarity, ranking and consistency analysis over neutrosophic refined sets", "neutro"};
  app.require_subcommand(1);
  detail::Common common;

  auto* sim = app.add_subcommand("similarity", "Similarity between two set files");
  std::string set_a, set_b;
  bool weighted = false;
  std::vector<double> weight_list;
  detail::add_common(sim, common);
  sim->add_flag("--weighted", weighted, "Use weights from --weights or the first set file");
  sim->add_option("--weights", weight_list, "Comma-separated element weights")->delimiter(',');
  sim->add_option("set_a", set_a)->required()->check(CLI::ExistingFile);
  sim->add_option("set_b", set_b)->required()->check(CLI::ExistingFile);

  auto* rk = app.add_subcommand("rank", "Rank alternatives by similarity to the positive ideal");
  std::string problem_file;
  std::string polarity_name;
  detail::add_common(rk, common);
  rk->add_flag("--weighted", weighted, "Use criterion weights");
  rk->add_option("--polarity", polarity_name, "Also print the positive or negative ideal")
      ->check(CLI::IsMember({"positive", "negative"}));
  rk->add_option("problem", problem_file)->required()->check(CLI::ExistingFile);

  auto* cons = app.add_subcommand("consistency", "Consistency degrees of the measures on an inr problem");
  std::string objective_name = "maximize";
  detail::add_common(cons, common);
  cons->add_option("--objective", objective_name, "maximize (default) or minimize")
      ->check(CLI::IsMember({"maximize", "minimize"}));
  cons->add_option("problem", problem_file)->required()->check(CLI::ExistingFile);

  auto* ops = app.add_subcommand("ops", "Set algebra on svnr set files");
  std::string op;
  detail::add_common(ops, common, false);
  ops->add_option("operation", op)
      ->required()
      ->check(CLI::IsMember({"union", "intersection", "complement", "subset", "equal"}));
  ops->add_option("set_a", set_a)->required()->check(CLI::ExistingFile);
  ops->add_option("set_b", set_b)->check(CLI::ExistingFile);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsageError;
  }

  common.aggregation = detail::kAggregations.at(common.aggregation_name);
  std::optional<Polarity> polarity;
  if (!polarity_name.empty()) polarity = detail::kPolarities.at(polarity_name);
  Objective objective = detail::kObjectives.at(objective_name);

  try {
    if (*sim) return detail::run_similarity(common, set_a, set_b, weighted, weight_list, out);
    if (*rk) return detail::run_rank(common, problem_file, weighted, polarity, out);
    if (*cons) return detail::run_consistency(common, problem_file, objective, out);
    if (op != "complement" && set_b.empty()) {
      err << "error: operation '" << op << "' needs two set files\n";
      return kExitUsageError;
    }
    return detail::run_ops(common, op, set_a, set_b, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitDataError;
  }
}

}  // namespace neutro::cli
