#pragma once

#include <string>
#include <vector>

#include "kcut/golden.hpp"
#include "kcut/io.hpp"

namespace kcut {

// Table reproduction and the verification suite. Every check lands in one
// of four states; conjectural comparisons never fail the run, they report.
enum class CheckStatus { Match, Mismatch, Skipped, Undecided };
std::string to_string(CheckStatus s);

struct CellResult {
  int k = 0;
  int n = 0;
  CheckStatus status = CheckStatus::Skipped;
  bool has_expected = false;
  long long expected = 0;
  long long computed = 0;
  double ms = 0;
  std::string note;  // skip reason, detail
};

struct TableReport {
  std::string table;
  std::vector<CellResult> cells;
  int matches = 0;
  int mismatches = 0;
  int skipped = 0;
};

struct TableBudget {
  double seconds = 600;       // wall clock for the whole table
  double cell_seconds = 120;  // refuse cells estimated past this
  int max_universe = 14;      // refuse complexes on more vertices
};

// Recomputes one golden table by enumeration and homology. Cells whose
// estimated cost exceeds the budget are reported Skipped with the estimate;
// a cache makes repeated runs cheap.
TableReport reproduce_table(const std::string& name, const TableBudget& budget,
                            const ResultCache* cache = nullptr);

// Pure comparison step, separated so corrupted reference data is testable.
TableReport diff_table(const GoldenTable& expected, const TableReport& computed);

struct SuiteCheck {
  std::string name;
  CheckStatus status = CheckStatus::Skipped;
  bool conjectural = false;
  double ms = 0;
  std::string detail;
};

struct SuiteReport {
  std::vector<SuiteCheck> checks;
  int failed = 0;
  int undecided = 0;
  double total_ms = 0;
};

// Runs the formula-vs-enumeration checks across the small parameter grid,
// skipping what the budget rules out. with_conjectures adds the conjectural
// comparisons as reporting-only rows.
SuiteReport run_verification_suite(double budget_seconds, bool with_conjectures,
                                   const ResultCache* cache = nullptr);

// 0 all good, 1 any hard failure, 2 undecided rows only.
int exit_code_for(const SuiteReport& r);
int exit_code_for(const TableReport& r);

}  // namespace kcut
