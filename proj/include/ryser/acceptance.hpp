#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ryser/colored_graph.hpp"

namespace ryser {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;     // every check held and the run stayed within budget
  std::size_t checked = 0; // instances examined
  std::size_t failures = 0;
  std::string detail;      // first failure, or a summary
  double seconds = 0;
  double budget_seconds = 0;
};

inline constexpr int kCriterionCount = 9;

// Runs criterion 1..9. Never throws; exceptions count as failures.
CriterionResult run_criterion(int id);

// "[PASS] 3 <title> (n checked, 0.42 s <= 30 s) detail"
std::string format_result(const CriterionResult& result);

// Independent check that `parts` are monochromatic components of g (each
// part equals the component of its color through any of its vertices).
// Returns the first problem found.
std::optional<std::string> check_components(const ColoredCompleteGraph& g, const ComponentCover& cover);

// The colored instances examined by criteria 2 to 5, regenerated
// deterministically; criterion 6 runs on all of them.
std::vector<ColoredCompleteGraph> t_cover_instances();
std::vector<ColoredCompleteGraph> partial_cover_instances();
std::vector<ColoredCompleteGraph> blowup_instances();
std::vector<ColoredCompleteGraph> coarsened_blowup_instances();

}  // namespace ryser
