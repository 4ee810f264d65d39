#include <cmath>
#include <cstdio>
#include <sstream>

#include "json.hpp"

#include "tensortomo/suites.hpp"

namespace tt {

using ojson = nlohmann::ordered_json;

namespace {

// JSON has no inf/nan; keep them readable.
ojson num(double v) {
  if (std::isfinite(v)) return v;
  return std::isnan(v) ? "nan" : (v > 0 ? "inf" : "-inf");
}

ojson config_doc(const RunConfig& c) {
  ojson j;
  auto opt_i = [](const std::optional<int>& v) { return v ? ojson(*v) : ojson(nullptr); };
  auto opt_d = [](const std::optional<double>& v) { return v ? ojson(*v) : ojson(nullptr); };
  j["suite"] = c.suite;
  j["m"] = opt_i(c.m);
  j["r"] = opt_i(c.r);
  j["n"] = c.n ? ojson(*c.n) : ojson("symbolic");
  j["s"] = opt_d(c.s);
  j["t"] = opt_d(c.t);
  j["grid_volume"] = c.grid_volume;
  j["grid_dirs"] = c.grid_dirs;
  j["grid_offsets"] = c.grid_offsets;
  j["extent"] = c.extent;
  j["sphere_rings"] = c.sphere_rings;
  j["circle_nodes"] = c.circle_nodes;
  j["gram_rings"] = c.gram_rings;
  j["gram_fields"] = c.gram_fields;
  j["refine"] = c.refine;
  j["tol"] = opt_d(c.tol);
  j["seed"] = c.seed;
  return j;
}

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

std::string cell(const ojson& v) {
  if (v.is_number()) return sci(v.get<double>());
  if (v.is_string()) return v.get<std::string>();
  return "-";
}

}  // namespace

std::string config_json(const RunConfig& cfg) { return config_doc(cfg).dump(2); }

std::string render_report_json(const RunConfig& cfg, const std::vector<SuiteResult>& suites) {
  ojson doc;
  doc["format"] = "tensortomo-report 1";
  doc["config"] = config_doc(cfg);
  ojson arr = ojson::array();
  int total = 0, passed = 0;
  for (const auto& s : suites) {
    ojson js;
    js["suite"] = s.suite;
    js["passed"] = s.passed();
    ojson checks = ojson::array();
    for (const auto& c : s.checks) {
      ojson jc;
      jc["name"] = c.name;
      jc["kind"] = c.kind;
      jc["value"] = num(c.value);
      jc["tol"] = num(c.tol);
      jc["asserted"] = c.asserted;
      jc["pass"] = c.pass;
      for (const auto& [k, v] : c.extra) jc[k] = num(v);
      if (!c.note.empty()) jc["note"] = c.note;
      checks.push_back(jc);
    }
    js["checks"] = checks;
    arr.push_back(js);
    total += s.asserted_count();
    passed += s.pass_count();
  }
  doc["suites"] = arr;
  doc["summary"] = {{"asserted", total}, {"passed", passed}, {"failed", total - passed}, {"ok", passed == total}};
  return doc.dump(2) + "\n";
}

std::string render_report_table(const std::string& json_text) {
  ojson doc;
  try {
    doc = ojson::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed report: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("suites") || !doc["suites"].is_array())
    throw std::invalid_argument("malformed report: no suites array");
  std::ostringstream os;
  int rows = 0;
  char line[512];
  for (const auto& s : doc["suites"]) {
    if (!s.contains("checks")) throw std::invalid_argument("malformed report: suite without checks");
    int pass = 0, asserted = 0;
    for (const auto& c : s["checks"]) {
      if (c.value("asserted", true)) {
        ++asserted;
        pass += c.value("pass", false) ? 1 : 0;
      }
    }
    os << "== " << s.value("suite", std::string("?")) << "  (" << pass << "/" << asserted << " passed)\n";
    if (s["checks"].empty()) continue;
    std::snprintf(line, sizeof line, "  %-4s  %-52s %-10s %-10s %-10s %-10s %-10s\n", "", "check", "value", "tol",
                  "lhs", "rhs", "rel_err");
    os << line;
    for (const auto& c : s["checks"]) {
      ++rows;
      const bool asserted_c = c.value("asserted", true);
      const char* st = !asserted_c ? "info" : (c.value("pass", false) ? "ok" : "FAIL");
      const std::string kind = c.value("kind", std::string());
      const ojson none;
      const std::string relerr = kind == "rel_err" ? cell(c.value("value", none)) : "-";
      std::snprintf(line, sizeof line, "  %-4s  %-52s %-10s %-10s %-10s %-10s %-10s\n", st,
                    c.value("name", std::string()).c_str(), cell(c.value("value", none)).c_str(),
                    cell(c.value("tol", none)).c_str(), cell(c.contains("lhs") ? c["lhs"] : none).c_str(),
                    cell(c.contains("rhs") ? c["rhs"] : none).c_str(), relerr.c_str());
      os << line;
      if (c.contains("note")) os << "        " << c["note"].get<std::string>() << "\n";
    }
  }
  if (rows == 0) return "no checks recorded\n";
  if (doc.contains("summary")) {
    const auto& sm = doc["summary"];
    os << "summary: " << sm.value("passed", 0) << "/" << sm.value("asserted", 0) << " asserted checks passed\n";
  }
  return os.str();
}

}  // namespace tt
