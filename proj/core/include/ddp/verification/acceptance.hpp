#pragma once

#include <functional>
#include <string>
#include <vector>

namespace ddp::acceptance {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;  // measured values against thresholds
  double seconds = 0.0;
};

struct Criterion {
  int id;
  std::string name;
  std::function<CriterionResult()> run;
};

CriterionResult series_equivalence();      // 1
CriterionResult qfibonacci_identities();   // 2
CriterionResult evaluator_oracle();        // 3
CriterionResult saddle_layer();            // 4
CriterionResult special_functions();       // 5
CriterionResult uniform_coefficients();    // 6
CriterionResult uniform_asymptotics();     // 7
CriterionResult scaling_collapse();        // 8
CriterionResult scaling_curve(unsigned threads);  // 9
CriterionResult exponent_table();          // 10

std::vector<Criterion> all_criteria(unsigned threads = 1);

// Runs the criteria in order. An exception inside a criterion counts as a
// failure with the message in `detail`.
std::vector<CriterionResult> run_all(unsigned threads = 1,
                                     const std::function<void(const CriterionResult&)>& on_result = {});

// "PASS [3] evaluator oracle: ..." / "FAIL [...]"
std::string format_line(const CriterionResult& r);

}  // namespace ddp::acceptance
