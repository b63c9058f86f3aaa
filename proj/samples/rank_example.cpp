// Ranks the four investment alternatives of samples/investment_inr.json with
// every measure and prints the consistency-based measure choice.

#include <fstream>
#include <iostream>
#include <sstream>

#include "neutro/io.hpp"

int main(int argc, char** argv) {
  const char* path = argc > 1 ? argv[1] : "investment_inr.json";
  std::ifstream in(path);
  if (!in) {
    std::cerr << "cannot open " << path << "\n";
    return 1;
  }
  std::stringstream text;
  text << in.rdbuf();

  try {
    auto problem = std::get<neutro::InrProblem>(neutro::io::parse_problem(text.str()));
    for (auto m : neutro::kAllMeasures) {
      auto report = neutro::rank(problem, m, /*weighted=*/true);
      neutro::io::write_ranking_table(std::cout, report, problem.alternatives());
      std::cout << "\n";
    }
    std::vector<neutro::MeasureVariant> candidates{
        {neutro::Measure::jaccard, false}, {neutro::Measure::dice, false}, {neutro::Measure::cosine, false}};
    auto choice = neutro::select_measure(problem, candidates);
    std::cout << "most consistent: " << neutro::to_string(choice.selected_entry().variant) << " ("
              << neutro::io::fixed5(choice.selected_entry().degree) << ")\n";
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
}
