// table1.hpp
//
// Reproduction report for the summary table of repetition thresholds.
// Each cell lists the claimed value and the finite runs backing it: an
// exhaustive search for the lower bound, a checked coloring for the upper
// bound.  Upper bounds concern infinite graphs, so a checked finite
// truncation is reported as desk-scale evidence, never as a proof.

#pragma once

#include <json.hpp>
#include <string>
#include <vector>

namespace reptree {

inline constexpr const char* kToolVersion = "0.3.0";

enum class CellStatus { Reproduced, EvidenceOnly, OutOfScope };
std::string to_string(CellStatus s);

struct EvidenceRun {
  std::string direction;  // "lower" or "upper"
  std::string description;
  std::string command;  // CLI invocation that repeats the run
  std::string label;    // "exhaustive" or "desk-scale evidence"
  bool passed = false;
  std::string result;
  double seconds = 0.0;
};

struct Table1Cell {
  std::string graph_class;  // P, C, S, CP3, T3, CP, T
  std::string alphabet;     // "2".."5" or "k>=6"
  std::string claimed;
  bool shaded = false;
  CellStatus status = CellStatus::OutOfScope;
  std::string note;
  std::vector<EvidenceRun> runs;

  bool ok() const;
};

enum class Table1Profile { Quick, Full };

struct Table1Report {
  std::string version = kToolVersion;
  std::string profile;
  std::uint64_t node_budget = 0;
  std::vector<Table1Cell> cells;

  bool ok() const;
};

Table1Report run_table1(Table1Profile profile, unsigned threads = 1);
nlohmann::json report_to_json(const Table1Report& r);
std::string report_to_text(const Table1Report& r);

}  // namespace reptree
