#include "pseudoknot/table.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "pseudoknot/conway.hpp"
#include "pseudoknot/invariants.hpp"

namespace pk {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

std::optional<long> to_number(std::string_view s) {
  long v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) return std::nullopt;
  return v;
}

std::string bound(std::size_t v) { return v == kInfinity ? "inf" : std::to_string(v); }

}  // namespace

bool TableEntry::ambiguous() const { return std::find(flags.begin(), flags.end(), "ambiguous") != flags.end(); }

std::optional<std::size_t> TableEntry::expected_ujb() const {
  auto v = to_number(expected);
  if (!v || *v < 0) return std::nullopt;
  return static_cast<std::size_t>(*v);
}

std::optional<int> TableEntry::expected_class() const {
  if (!expected.starts_with("class:")) return std::nullopt;
  auto v = to_number(std::string_view(expected).substr(6));
  if (!v) return std::nullopt;
  return static_cast<int>(*v);
}

std::vector<TableEntry> parse_table(std::istream& in) {
  std::vector<TableEntry> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    if (lineno == 1 && line.starts_with("name")) continue;
    auto cols = split(line, '\t');
    if (cols.size() < 3) throw ParseError("table line " + std::to_string(lineno) + ": expected 3 columns");
    TableEntry e{cols[0], cols[1], cols[2], {}};
    if (cols.size() > 3 && !cols[3].empty()) e.flags = split(cols[3], ',');
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<TableEntry> load_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return parse_table(in);
}

std::string status_name(EntryStatus s) {
  switch (s) {
    case EntryStatus::match: return "match";
    case EntryStatus::mismatch: return "mismatch";
    case EntryStatus::unknown: return "unknown";
    case EntryStatus::computed: return "computed";
    case EntryStatus::error: return "error";
  }
  return "error";
}

std::size_t TableReport::count(EntryStatus s) const {
  return static_cast<std::size_t>(
      std::count_if(entries.begin(), entries.end(), [&](const EntryReport& e) { return e.status == s; }));
}

TableReport verify_table(const std::vector<TableEntry>& entries, const VerifyOptions& options) {
  TableReport report;
  for (const auto& entry : entries) {
    EntryReport r;
    r.entry = entry;
    try {
      const GaussDiagram d = conway_to_gauss(entry.conway);
      r.ih = canonical_decorated(compute_Ih(d));
      auto group = std::find_if(report.ih_partition.begin(), report.ih_partition.end(),
                                [&](const auto& g) { return g.first == r.ih; });
      if (group == report.ih_partition.end()) report.ih_partition.push_back({r.ih, {entry.name}});
      else group->second.push_back(entry.name);

      auto expected = entry.expected_ujb();
      if (expected && !r.ih.empty()) {
        r.status = EntryStatus::mismatch;
        r.message = "Ih is nonempty, so no crossing changes unknot it";
      } else if (expected && options.compute_ujb) {
        r.ujb = u_jb(d, std::max(options.depth_max, *expected), options.budget);
        const auto& u = *r.ujb;
        r.message = "u_JB in [" + bound(u.lower) + ", " + bound(u.upper) + "]";
        if (u.lower == *expected && u.upper == *expected) r.status = EntryStatus::match;
        else if (u.lower <= *expected && *expected <= u.upper) r.status = EntryStatus::unknown;
        else r.status = EntryStatus::mismatch;
      }
      if (entry.ambiguous()) {
        r.message += r.message.empty() ? "ambiguous row" : "; ambiguous row";
        r.status = EntryStatus::computed;
      }
    } catch (const std::exception& ex) {
      r.status = EntryStatus::error;
      r.message = ex.what();
    }
    report.entries.push_back(std::move(r));
  }
  return report;
}

std::string format_report(const TableReport& r) {
  std::ostringstream out;
  for (const auto& e : r.entries) {
    out << e.entry.name << '\t' << e.entry.conway << '\t' << e.entry.expected << '\t' << status_name(e.status)
        << "\tIh=\"" << e.ih << '"';
    if (!e.message.empty()) out << '\t' << e.message;
    out << '\n';
  }
  out << "summary: " << r.count(EntryStatus::match) << " match, " << r.count(EntryStatus::mismatch) << " mismatch, "
      << r.count(EntryStatus::unknown) << " unknown, " << r.count(EntryStatus::computed) << " computed, "
      << r.count(EntryStatus::error) << " error\n";
  out << "Ih partition: " << r.ih_partition.size() << " classes\n";
  for (const auto& [ih, names] : r.ih_partition) {
    out << "  \"" << ih << "\":";
    for (const auto& n : names) out << ' ' << n;
    out << '\n';
  }
  return out.str();
}

}  // namespace pk
