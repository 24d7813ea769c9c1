#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "pseudoknot/unknotting.hpp"

namespace pk {

// One fixture row: name, Conway symbol, expected value ("<int>" u_JB,
// "class:<n>", or "-"), optional comma-separated flags such as `ambiguous`.
struct TableEntry {
  std::string name;
  std::string conway;
  std::string expected;
  std::vector<std::string> flags;

  bool ambiguous() const;
  std::optional<std::size_t> expected_ujb() const;
  std::optional<int> expected_class() const;
};

// Tab separated; a first line starting with "name" and lines starting with
// '#' are skipped. Throws ParseError on rows with fewer than three columns.
std::vector<TableEntry> parse_table(std::istream& in);
std::vector<TableEntry> load_table(const std::string& path);

enum class EntryStatus {
  match,       // expected u_JB reproduced exactly
  mismatch,    // contradicts the expectation
  unknown,     // consistent bounds, not exact within budget
  computed,    // nothing to compare (class tags, "-", ambiguous rows)
  error,       // the row could not be processed
};

std::string status_name(EntryStatus s);

struct EntryReport {
  TableEntry entry;
  EntryStatus status = EntryStatus::computed;
  std::string ih;
  std::optional<UnknottingResult> ujb;
  std::string message;
};

struct TableReport {
  std::vector<EntryReport> entries;
  // Entry names grouped by Ih value, groups in order of first appearance.
  std::vector<std::pair<std::string, std::vector<std::string>>> ih_partition;

  std::size_t count(EntryStatus s) const;
};

struct VerifyOptions {
  bool compute_ujb = true;
  std::size_t depth_max = 3;
  UnknotBudget budget;
};

// Never throws for a bad row; its error is recorded in the report.
TableReport verify_table(const std::vector<TableEntry>& entries, const VerifyOptions& options = {});

std::string format_report(const TableReport& r);

}  // namespace pk
