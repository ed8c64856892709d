#pragma once

#include <json.hpp>

#include "zonocube/digraph.hpp"

namespace zonocube {

using Json = nlohmann::ordered_json;

// A machine-readable verdict. Proved statements are asserted (pass/fail);
// open conjectures only ever report their observed status.
struct CheckReport {
  std::string id;
  Json params;
  enum class Verdict { Pass, Fail, ReportOnly } verdict = Verdict::ReportOnly;
  Json witnesses;
  double runtime_ms = 0.0;

  Json to_json() const;
  bool failed() const { return verdict == Verdict::Fail; }
};

// Unique source/sink of the symmetric flip digraph. Assertive when n is even
// and d odd, when d = 2, or when n = d+3; report-only otherwise.
CheckReport check_conjecture1(int n, int d, SearchOptions opts = {});

// The small printed digraphs: SQ(4,1), SQ(5,1), SQ(4,2), SQ(5,2) with their
// exact node inversion sets and arrow kinds; SQ(6,3)'s size is recorded and
// compared against the expected 20.
CheckReport check_example_fixtures(SearchOptions opts = {});

// Compares validity-only barrel applicability with the geometric
// fragment-assembly criterion on every enumerated symmetric cubillage.
// Report-only: divergences are findings, not failures.
CheckReport check_barrel_criteria_divergence(int n, int d, SearchOptions opts = {});

// Middle-color reduction SQ(2m+1,d) -> SQ(2m,d) and, for d even, the core
// projection SQ(2m,d) -> Q(m,d/2): arrow consistency, surjectivity, fiber
// connectivity, fullness, and the arrow-kind case analysis.
CheckReport check_morphism_conjectures(int m, int d, SearchOptions opts = {});

Json cubillage_inversions_json(const Cubillage& q);

}  // namespace zonocube
