// One PASS/FAIL line per acceptance criterion; exit status 0 iff all pass.
// Writes the full report next to the binary (acceptance_report.json).

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <string>
#include <vector>

#include "tensortomo/fixtures.hpp"
#include "tensortomo/suites.hpp"

using namespace tt;
using Clock = std::chrono::steady_clock;

namespace {

struct Line {
  int id;
  std::string title;
  bool pass;
  std::string detail;
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(const char* f, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

bool starts(const std::string& s, const std::string& p) { return s.rfind(p, 0) == 0; }
bool has(const std::string& s, const std::string& p) { return s.find(p) != std::string::npos; }

using Pred = std::function<bool(const CheckResult&)>;

// Summary of the asserted checks selected by pred: pass flag, count, worst value, failing names.
struct Tally {
  int total = 0, failed = 0;
  double worst = 0;
  std::vector<std::string> failing;
  bool ok() const { return total > 0 && failed == 0; }
};

Tally tally(const SuiteResult& s, const Pred& pred) {
  Tally t;
  for (const auto& c : s.checks) {
    if (!c.asserted || !pred(c)) continue;
    ++t.total;
    t.worst = std::max(t.worst, c.value);
    if (!c.pass) {
      ++t.failed;
      t.failing.push_back(c.name);
    }
  }
  return t;
}

std::string describe(const Tally& t, const char* worst_fmt = nullptr) {
  std::string s = std::to_string(t.total - t.failed) + "/" + std::to_string(t.total) + " checks";
  if (worst_fmt) s += ", " + fmt(worst_fmt, t.worst);
  if (!t.failing.empty()) {
    s += "; failing:";
    const size_t show = std::min<size_t>(t.failing.size(), 8);
    for (size_t i = 0; i < show; ++i) s += " " + t.failing[i];
    if (t.failing.size() > show) s += " ...";
  }
  return s;
}

}  // namespace

int main() {
  const auto t_all = Clock::now();
  RunConfig cfg;
  cfg.suite = "acceptance";
  cfg.refine = true;
  std::vector<Line> lines;
  std::vector<SuiteResult> suites;

  // 1-4: symbolic regression, timed per order
  {
    auto t0 = Clock::now();
    RunConfig c = cfg;
    c.r = 0;
    SuiteResult s0 = suite_symbolic_regression(c);
    const double dt0 = seconds_since(t0);
    Tally t = tally(s0, [](const CheckResult& c) { return starts(c.name, "A("); });
    lines.push_back({1, "symbolic regression r=0 (m=0..5) exact, < 1 s", t.ok() && t.total == 6 && dt0 < 1.0,
                     describe(t) + fmt(", %.3f s", dt0)});

    t0 = Clock::now();
    c.r = 1;
    SuiteResult s1 = suite_symbolic_regression(c);
    const double dt1 = seconds_since(t0);
    Tally t1 = tally(s1, [](const CheckResult& c) { return starts(c.name, "A~(") || starts(c.name, "P(1,"); });
    lines.push_back({2, "symbolic regression r=1 (A~ m=0..5, P(1,k) m=0..6) exact, < 1 s", t1.ok() && dt1 < 1.0,
                     describe(t1) + fmt(", %.3f s", dt1)});

    t0 = Clock::now();
    c.r = 2;
    SuiteResult s2 = suite_symbolic_regression(c);
    const double dt2 = seconds_since(t0);
    Tally t2 = tally(s2, [](const CheckResult& c) { return starts(c.name, "A~("); });
    lines.push_back({3, "symbolic regression r=2 (A~ m=0..5) exact, < 5 s", t2.ok() && dt2 < 5.0,
                     describe(t2) + fmt(", %.3f s", dt2)});

    Tally t4 = tally(s2, [](const CheckResult& c) { return starts(c.name, "adjoint("); });
    lines.push_back({4, "self-adjointness witness A~(2,2,1) vs A(2,2,1)", t4.ok() && t4.total == 2, describe(t4)});

    SuiteResult all = s0;
    all.suite = "symbolic-regression";
    for (const auto* s : {&s1, &s2}) all.checks.insert(all.checks.end(), s->checks.begin(), s->checks.end());
    suites.push_back(all);
  }

  // 5
  {
    const auto t0 = Clock::now();
    SuiteResult s = suite_contraction_oracle(cfg);
    const double dt = seconds_since(t0);
    Tally t = tally(s, [](const CheckResult&) { return true; });
    lines.push_back({5, "contraction expansion vs oracle <= 1e-12, < 30 s", t.ok() && dt < 30.0,
                     describe(t, "worst %.2e") + fmt(", %.1f s", dt)});
    suites.push_back(s);
  }

  // 6, 7, 11
  {
    SuiteResult s = suite_sphere_identities(cfg);
    Tally t6 = tally(s, [](const CheckResult& c) { return starts(c.name, "slice integral"); });
    lines.push_back({6, "sphere slice integrals (n=3, m+k<=3) <= 1e-6", t6.ok() && t6.total == 4,
                     describe(t6, "worst %.2e")});
    Tally t7 = tally(s, [](const CheckResult& c) { return starts(c.name, "S1[") || starts(c.name, "S2["); });
    lines.push_back({7, "sphere calculus: adjoint pairs, eigenvalues, j d^2 identities", t7.ok(), describe(t7)});
    Tally t11 = tally(s, [](const CheckResult& c) { return starts(c.name, "Gram"); });
    std::string extra;
    for (const auto& c : s.checks)
      if (!c.asserted && starts(c.name, "Gram"))
        for (const auto& [k, v] : c.extra)
          if (k == "min_eig") extra += "; " + c.name.substr(0, c.name.find(" on")) + fmt(" min eig %.3e", v);
    lines.push_back({11, "Gram positivity of A(m,r,0), A(m,r,r) for m,r <= 2 (min eig >= -1e-8)",
                     t11.ok() && t11.total == 15, describe(t11) + extra + " (reported only)"});
    suites.push_back(s);
  }

  // 8, 9
  {
    SuiteResult s = suite_slice(cfg);
    Tally t8 = tally(s, [](const CheckResult& c) { return has(c.name, " slice"); });
    lines.push_back({8, "slice theorem residual <= 1e-3 (Gaussian <= 1e-4), n=2, m<=2", t8.ok(),
                     describe(t8, "worst %.2e")});
    Tally t9 = tally(s, [](const CheckResult& c) { return has(c.name, "delta_xi^"); });
    lines.push_back({9, "iterated delta_xi vs P^(r,k) evaluation <= 1e-3, r<=2, m<=2", t9.ok() && t9.total == 9,
                     describe(t9, "worst %.2e")});
    suites.push_back(s);
  }

  // 10
  {
    SuiteResult s = suite_isometry(cfg);
    Tally def = tally(s, [](const CheckResult& c) { return has(c.name, "(default)"); });
    Tally dbl = tally(s, [](const CheckResult& c) { return has(c.name, "(doubled)"); });
    const double total = seconds_since(t_all);
    const bool ok = def.ok() && dbl.ok() && def.total == 19 && dbl.total == 19 && total <= 600;
    lines.push_back({10, "isometry: rel_err <= 2% default, <= 1% doubled, anchor = pi +- 1%, total <= 10 min", ok,
                     "default " + describe(def, "worst %.2e") + "; doubled " + describe(dbl, "worst %.2e") +
                         fmt("; total runtime %.0f s", total)});
    suites.push_back(s);
  }

  std::sort(lines.begin(), lines.end(), [](const Line& a, const Line& b) { return a.id < b.id; });
  int failed = 0;
  for (const auto& l : lines) {
    std::printf("[%s] criterion %2d: %s -- %s\n", l.pass ? "PASS" : "FAIL", l.id, l.title.c_str(), l.detail.c_str());
    failed += !l.pass;
  }
  std::printf("%d/%zu criteria passed\n", int(lines.size()) - failed, lines.size());

  std::ofstream("acceptance_report.json") << render_report_json(cfg, suites);
  return failed == 0 ? 0 : 1;
}
