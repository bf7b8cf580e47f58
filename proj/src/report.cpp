#include "report.h"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace qrll {

const char* status_name(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::report_only_mismatch:
      return "report-only-mismatch";
  }
  return "?";
}

bool Report::all_passed() const { return failed_count() == 0; }

int Report::failed_count() const {
  int n = 0;
  for (const auto& c : checks)
    if (c.status == Status::fail) ++n;
  return n;
}

void Report::sort_by_id() {
  std::stable_sort(checks.begin(), checks.end(),
                   [](const CheckResult& a, const CheckResult& b) {
                     return a.id < b.id;
                   });
}

std::string json_escape(const std::string& s) {
  std::string o;
  o.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '"':
        o += "\\\"";
        break;
      case '\\':
        o += "\\\\";
        break;
      case '\n':
        o += "\\n";
        break;
      case '\t':
        o += "\\t";
        break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          o += buf;
        } else {
          o += c;
        }
    }
  }
  return o;
}

std::string Report::to_ndjson(bool with_timings) const {
  std::ostringstream os;
  for (const auto& c : checks) {
    os << "{\"check\":\"" << json_escape(c.id) << "\",\"relation\":\""
       << json_escape(c.relation) << "\",\"status\":\"" << status_name(c.status)
       << "\"";
    os << ",\"residues\":[";
    size_t n = std::min(c.residues.size(), kResidueCap);
    for (size_t i = 0; i < n; ++i) {
      if (i) os << ",";
      os << "{\"at\":\"" << json_escape(c.residues[i].first) << "\",\"value\":\""
         << json_escape(c.residues[i].second) << "\"}";
    }
    os << "]";
    if (c.residues.size() > kResidueCap)
      os << ",\"residues_truncated\":" << c.residues.size() - kResidueCap;
    os << ",\"provenance\":{";
    for (size_t i = 0; i < c.provenance.size(); ++i) {
      if (i) os << ",";
      os << "\"" << json_escape(c.provenance[i].first) << "\":\""
         << json_escape(c.provenance[i].second) << "\"";
    }
    os << "}";
    if (with_timings) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.3f", c.elapsed_ms);
      os << ",\"elapsed_ms\":" << buf;
    }
    os << "}\n";
  }
  int fails = failed_count();
  int reportonly = 0;
  for (const auto& c : checks)
    if (c.status == Status::report_only_mismatch) ++reportonly;
  os << "{\"summary\":true,\"checks\":" << checks.size() << ",\"failed\":"
     << fails << ",\"report_only_mismatches\":" << reportonly << ",\"verdict\":\""
     << (fails == 0 ? "pass" : "fail") << "\"}\n";
  return os.str();
}

std::string Report::to_human() const {
  std::ostringstream os;
  for (const auto& c : checks) {
    os << (c.status == Status::pass
               ? "  ok  "
               : c.status == Status::fail ? " FAIL " : " note ")
       << c.id << "  " << c.relation;
    if (c.elapsed_ms > 0) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "  (%.1f ms)", c.elapsed_ms);
      os << buf;
    }
    os << "\n";
    size_t n = std::min(c.residues.size(), kResidueCap);
    for (size_t i = 0; i < n; ++i)
      os << "        residue " << c.residues[i].first << " = "
         << c.residues[i].second << "\n";
    if (c.residues.size() > kResidueCap)
      os << "        ... " << c.residues.size() - kResidueCap
         << " more residues\n";
    for (const auto& [k, v] : c.provenance)
      os << "        [" << k << "] " << v << "\n";
  }
  int fails = failed_count();
  os << (fails == 0 ? "all checks passed" : "FAILURES: ")
     << (fails == 0 ? std::string() : std::to_string(fails)) << " ("
     << checks.size() << " checks)\n";
  return os.str();
}

}  // namespace qrll
