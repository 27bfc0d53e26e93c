#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "enumerate.hpp"
#include "version.hpp"

namespace permcount {

using ordered_json = nlohmann::ordered_json;

// One named computation or verification.  counts is insertion-ordered and
// holds integers only; verified is absent for plain counting queries.
struct Check {
  std::string name;
  std::string params;
  std::vector<std::pair<std::string, u64>> counts;
  std::optional<bool> verified;
  std::vector<std::string> counterexamples;
  std::vector<std::string> elements;  // only for --list style queries
  double elapsed_ms = 0.0;
  std::optional<std::string> skipped;  // reason, when a check was not run
};

struct Report {
  std::string command;
  ordered_json query = ordered_json::object();
  std::string method;
  std::string order_name;
  std::vector<Check> checks;
  double elapsed_ms = 0.0;

  // 0 = everything computed and verified, 1 = a check failed or was skipped
  int exit_code() const {
    for (const Check& c : checks) {
      if (c.skipped) return 1;
      if (c.verified && !*c.verified) return 1;
    }
    return 0;
  }
};

inline ordered_json to_json(const Report& r) {
  ordered_json out;
  out["tool"] = tool_name;
  out["version"] = tool_version;
  out["command"] = r.command;
  out["query"] = r.query;
  out["convention"] = convention_note;
  if (!r.order_name.empty()) out["order"] = r.order_name;
  if (!r.method.empty()) out["method"] = r.method;
  out["checks"] = ordered_json::array();
  for (const Check& c : r.checks) {
    ordered_json jc;
    jc["name"] = c.name;
    jc["params"] = c.params;
    ordered_json counts = ordered_json::object();
    for (const auto& [k, v] : c.counts) counts[k] = v;
    jc["counts"] = counts;
    if (c.verified) jc["verified"] = *c.verified;
    if (!c.counterexamples.empty()) jc["counterexamples"] = c.counterexamples;
    if (!c.elements.empty()) jc["elements"] = c.elements;
    if (c.skipped) jc["skipped"] = *c.skipped;
    jc["elapsed_ms"] = c.elapsed_ms;
    out["checks"].push_back(std::move(jc));
  }
  out["elapsed_ms"] = r.elapsed_ms;
  return out;
}

inline std::string render_json(const Report& r) { return to_json(r).dump(2) + "\n"; }

inline std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += "\"\"";
    out += ch;
  }
  out += "\"";
  return out;
}

// One row per named count; check params carry the count's own name.
inline std::string render_csv(const Report& r) {
  std::ostringstream os;
  os << "check,params,value,verified,elapsed_ms\n";
  for (const Check& c : r.checks) {
    std::string ver = c.verified ? (*c.verified ? "true" : "false") : "";
    if (c.skipped) {
      os << csv_escape(c.name) << ',' << csv_escape(c.params + " skipped=" + *c.skipped)
         << ",,," << c.elapsed_ms << "\n";
      continue;
    }
    for (const auto& [k, v] : c.counts) {
      std::string params = c.params.empty() ? "count=" + k : c.params + " count=" + k;
      os << csv_escape(c.name) << ',' << csv_escape(params) << ',' << v << ',' << ver << ','
         << c.elapsed_ms << "\n";
    }
  }
  return os.str();
}

inline std::string render_text(const Report& r) {
  std::ostringstream os;
  os << tool_name << ' ' << tool_version << " — " << r.command << "\n";
  os << "convention: " << convention_note;
  if (!r.order_name.empty()) os << "   order: " << r.order_name;
  if (!r.method.empty()) os << "   method: " << r.method;
  os << "\n";
  if (!r.query.empty()) os << "query: " << r.query.dump() << "\n";
  for (const Check& c : r.checks) {
    std::string tag = "[ ok ]";
    if (c.skipped) tag = "[skip]";
    else if (c.verified) tag = *c.verified ? "[PASS]" : "[FAIL]";
    os << tag << ' ' << c.name;
    if (!c.params.empty()) os << ' ' << c.params;
    os << ':';
    if (c.skipped) {
      os << ' ' << *c.skipped;
    } else {
      for (const auto& [k, v] : c.counts) os << ' ' << k << '=' << v;
    }
    os << "   (" << c.elapsed_ms << " ms)\n";
    for (const std::string& e : c.elements) os << "    " << e << "\n";
    if (!c.counterexamples.empty()) {
      os << "    counterexamples:\n";
      for (const std::string& x : c.counterexamples) os << "      " << x << "\n";
    }
  }
  os << "total " << r.elapsed_ms << " ms\n";
  return os.str();
}

inline std::string render(const Report& r, const std::string& format) {
  if (format == "json") return render_json(r);
  if (format == "csv") return render_csv(r);
  return render_text(r);
}

}  // namespace permcount
