#pragma once

// The acceptance grid as runnable checks.

#include <functional>
#include <string>
#include <vector>

#include "cpindex/records.hpp"

namespace cpindex::selftest {

struct Outcome {
  bool passed = false;
  std::string detail;
};

struct Criterion {
  int id = 0;
  std::string name;
  std::function<Outcome()> run;
};

Outcome closed_form_complex();
Outcome closed_form_real();
Outcome relation_shapes();
Outcome flag_cohomology_oracles();
Outcome wreath_class_properties();
Outcome ring_axioms(unsigned seed = 20240917, int triples = 1000);
Outcome applied_bounds();

const std::vector<Criterion>& criteria();

/// Runs one criterion, timing it and turning exceptions into failures.
records::CriterionRecord run_criterion(const Criterion& c);
records::SelftestRecord run_all();

}  // namespace cpindex::selftest
