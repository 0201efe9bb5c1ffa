#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tamed/config.hpp"

namespace tamed {

enum class Verdict { Match, Mismatch, Partial };

std::string verdict_name(Verdict v);

/// Process exit code for a comparison outcome: MATCH 0, PARTIAL 2,
/// MISMATCH 3. (Errors exit 1 at the CLI layer.)
int verdict_exit_code(Verdict v);

struct ReportRow {
  Weight weight;
  Int topological;
  std::optional<Int> analytic;  // absent when the mode solve was refused
  bool match = false;
  std::string note;
};

struct ComparisonReport {
  int rank = 1;
  std::vector<Rat> taming;
  Rat window_lo = 0, window_hi = 0;
  std::optional<Rat> support_bound;
  bool admissibility_pass = false;
  double admissibility_last_ratio = 0.0;
  std::vector<ReportRow> rows;
  Verdict verdict = Verdict::Partial;
};

Character run_topological(const ProblemConfig& cfg);

/// Requires an [analytic] section describing a built-in model.
Character run_analytic(const ProblemConfig& cfg, const SolveOptions& opt = {});

/// Computes both sides over the window and compares per weight. Per-mode
/// solver refusals leave rows without analytic data (PARTIAL); any definite
/// disagreement wins (MISMATCH).
ComparisonReport run_compare(const ProblemConfig& cfg,
                             const SolveOptions& opt = {});

std::string render_character_text(const Character& c);
std::string render_character_machine(const Character& c, const std::string& mode);
std::string render_report_text(const ComparisonReport& r);
std::string render_report_machine(const ComparisonReport& r);

}  // namespace tamed
