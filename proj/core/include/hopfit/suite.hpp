#pragma once

#include "hopfit/census.hpp"
#include "hopfit/verdict.hpp"

namespace hopfit {

// One verification row, keyed to the theorem or module invariant it checks.
// `instances` counts hypothesis-satisfying cases examined; `vacuous` counts
// those whose hypothesis is forced on every finite act (pigeonhole), so a
// green row is interpretable.  A nonempty `skipped` means a cap guard
// tripped; that is reported, never silently passed.
struct SuiteRow {
  std::string id;
  std::string tag;
  std::string statement;
  long long instances = 0;
  long long vacuous = 0;
  std::vector<Json> failures;
  std::string skipped;
  double wall_ms = 0;
};

struct SuiteReport {
  CensusScope scope;
  std::vector<SuiteRow> rows;

  bool passed() const;
  long long failure_count() const;
  bool any_skipped() const;
  Json to_json(bool include_timing = true) const;
};

// Runs every verification row over the census (or catalog) scope.  With
// jobs > 1 the per-act precomputation is spread over threads; the report is
// deterministic either way.
SuiteReport run_suite(const CensusScope& scope, int jobs = 1);

}  // namespace hopfit
