#pragma once

#include <string>
#include <utility>
#include <vector>

namespace qrll {

enum class Status { pass, fail, report_only_mismatch };

const char* status_name(Status s);

struct CheckResult {
  std::string id;        // stable sort key, unique per run
  std::string relation;  // human-readable identity name
  Status status = Status::pass;
  // residue entries: (location, canonical value string); capped on emission
  std::vector<std::pair<std::string, std::string>> residues;
  // ordered provenance key/values (expansion directions, conventions, ...)
  std::vector<std::pair<std::string, std::string>> provenance;
  double elapsed_ms = 0;  // excluded from the determinism contract

  void residue(std::string at, std::string value) {
    residues.emplace_back(std::move(at), std::move(value));
  }
  void prov(std::string k, std::string v) {
    provenance.emplace_back(std::move(k), std::move(v));
  }
  void set(bool ok) { status = ok ? Status::pass : Status::fail; }
};

struct Report {
  std::vector<CheckResult> checks;

  void add(CheckResult r) { checks.push_back(std::move(r)); }
  void merge(Report other) {
    for (auto& c : other.checks) checks.push_back(std::move(c));
  }
  bool all_passed() const;  // report-only mismatches do not count as failures
  int failed_count() const;
  void sort_by_id();

  // newline-delimited JSON, one object per check plus a trailing summary
  std::string to_ndjson(bool with_timings) const;
  std::string to_human() const;
};

std::string json_escape(const std::string& s);

inline constexpr size_t kResidueCap = 50;

}  // namespace qrll
