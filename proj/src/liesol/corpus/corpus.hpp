#ifndef LIESOL_CORPUS_CORPUS_HPP
#define LIESOL_CORPUS_CORPUS_HPP

#include <string>
#include <vector>

#include "liesol/api/json_io.hpp"

namespace liesol {

// Embedded corpus asset (versioned JSON, append-only).
const char* corpus_json_text();

struct FactResult {
  std::string check;
  std::string anchor;
  bool pass = false;
  std::string detail;  // mismatch description, empty on pass
};

struct EntryResult {
  std::string id;
  bool pass = false;
  std::vector<FactResult> facts;
};

struct CorpusReport {
  bool pass = false;
  int entries_run = 0;
  int facts_run = 0;
  int failures = 0;
  std::vector<EntryResult> entries;
};

// Runs every expected fact of every entry matching the filter (tag or id
// substring; empty = all). Deterministic: entries in corpus order.
CorpusReport run_corpus(const std::string& filter = "");

ordered_json corpus_report_to_json(const CorpusReport& report);

}  // namespace liesol

#endif
