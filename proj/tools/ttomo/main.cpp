#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "tensortomo/ncpoly.hpp"
#include "tensortomo/opcalc.hpp"
#include "tensortomo/suites.hpp"
#include "tensortomo/symtensor.hpp"

namespace {

using ojson = nlohmann::ordered_json;

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::optional<int> parse_n(const std::string& s) {
  if (s.empty() || s == "symbolic") return std::nullopt;
  try {
    std::size_t pos = 0;
    const int v = std::stoi(s, &pos);
    if (pos == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw Usage("--n expects an integer or 'symbolic', got '" + s + "'");
}

void validate(const tt::RunConfig& c) {
  if (c.m && (*c.m < 0 || *c.m > tt::kMaxRank)) throw Usage("--m must lie in [0, " + std::to_string(tt::kMaxRank) + "]");
  if (c.r && *c.r < 0) throw Usage("--r must be nonnegative");
  if (c.n && *c.n < 2) throw Usage("--n must be at least 2");
  const int nn = c.n.value_or(2);
  if (c.t && !(*c.t > -nn / 2.0)) throw Usage("--t must exceed -n/2");
  for (int g : {c.grid_volume, c.grid_dirs, c.grid_offsets})
    if (g < 8 || g % 2) throw Usage("grid sizes must be even and at least 8");
  if (c.tol && !(*c.tol > 0)) throw Usage("--tol must be positive");
}

std::string poly_text(const tt::NCPoly& p, const std::optional<int>& n) {
  return n ? tt::specialize(p, *n).str() : p.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot write report '" + path + "'");
  os << text;
}

int cmd_derive(const tt::RunConfig& cfg) {
  const int m = cfg.m.value_or(0), r = cfg.r.value_or(0);
  if (r > tt::kMaxOrder)
    throw Usage("refusing to derive r = " + std::to_string(r) + ": depth cap is " + std::to_string(tt::kMaxOrder));
  ojson doc;
  doc["format"] = "tensortomo-derive 1";
  doc["config"] = ojson::parse(tt::config_json(cfg));
  ojson ops = ojson::array();
  bool ok = true;
  for (int l = 0; l <= r; ++l) {
    const tt::NCPoly at = tt::a_tilde(m, r, l);
    std::cout << "A~(" << m << "," << r << "," << l << ") = " << poly_text(at, cfg.n) << "\n";
  }
  for (int l = 0; l <= r; ++l) {
    const tt::NCPoly a = tt::a_operator(m, r, l);
    std::cout << "A(" << m << "," << r << "," << l << ") = " << poly_text(a, cfg.n) << "\n";
    const tt::NCPoly shown = cfg.n ? tt::specialize(a, *cfg.n) : a;
    ojson rep = ojson::parse(tt::derivation_report(m, r, l, shown));
    const auto& ch = rep["checks"];
    const bool sa = ch["self_adjoint"], rf = ch["rank_flow"], od = ch["order"];
    // the zero operator carries no order
    const bool order_ok = od || a.is_zero();
    std::cout << "  checks: self_adjoint=" << (sa ? "yes" : "NO") << " order=" << (order_ok ? "yes" : "NO")
              << " rank_flow=" << (rf ? "yes" : "NO") << "\n";
    ok = ok && sa && rf && order_ok;
    ops.push_back(rep);
  }
  doc["operators"] = ops;
  doc["summary"] = {{"ok", ok}};
  write_file(cfg.out, doc.dump(2) + "\n");
  std::cout << (ok ? "all checks passed" : "some checks FAILED") << "; report written to " << cfg.out << "\n";
  return ok ? 0 : 1;
}

int cmd_verify(const tt::RunConfig& cfg) {
  const auto& names = tt::suite_names();
  if (cfg.suite != "all" && std::find(names.begin(), names.end(), cfg.suite) == names.end()) {
    std::string list;
    for (const auto& s : names) list += s + ", ";
    throw Usage("unknown suite '" + cfg.suite + "' (expected one of " + list + "all)");
  }
  const auto results = tt::run_suite(cfg.suite, cfg);
  const std::string text = tt::render_report_json(cfg, results);
  write_file(cfg.out, text);
  std::cout << tt::render_report_table(text);
  bool ok = true;
  for (const auto& s : results) ok = ok && s.passed();
  std::cout << "report written to " << cfg.out << "\n";
  return ok ? 0 : 1;
}

int cmd_report(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) {
    std::cerr << "ttomo: cannot read report '" << path << "'\n";
    return 3;
  }
  std::stringstream ss;
  ss << is.rdbuf();
  try {
    std::cout << tt::render_report_table(ss.str());
  } catch (const std::invalid_argument& e) {
    std::cerr << "ttomo: " << e.what() << "\n";
    return 3;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tensortomo: derive sphere operators and verify ray transform norm identities", "ttomo"};
  app.require_subcommand(1);
  app.set_config("--config", "", "key = value file; flags override it");

  tt::RunConfig cfg;
  std::optional<int> m, r;
  std::optional<double> s, t, tol;
  std::string n_text;
  std::string out;
  bool refine = false;
  app.add_option("--m", m, "tensor rank");
  app.add_option("--r", r, "order of the formula");
  app.add_option("--n", n_text, "dimension, integer or 'symbolic'");
  app.add_option("--s", s, "Sobolev index s");
  app.add_option("--t", t, "weight index t");
  app.add_option("--grid-volume", cfg.grid_volume, "volume samples per axis");
  app.add_option("--grid-dirs", cfg.grid_dirs, "ray directions");
  app.add_option("--grid-offsets", cfg.grid_offsets, "ray offsets");
  app.add_option("--tol", tol, "override the check tolerance");
  app.add_option("--out", out, "report path");
  app.add_option("--seed", cfg.seed, "random seed");
  app.add_flag("--refine", refine, "isometry: also run on doubled grids");

  auto* derive = app.add_subcommand("derive", "print A(m,r,l) for l = 0..r")->fallthrough();
  auto* verify = app.add_subcommand("verify", "run a verification suite")->fallthrough();
  verify->add_option("--suite", cfg.suite, "suite name or 'all'")->required();
  std::string report_path;
  auto* report = app.add_subcommand("report", "render a report as a table")->fallthrough();
  report->add_option("path", report_path, "report file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (*report) return cmd_report(report_path);
    cfg.m = m;
    cfg.r = r;
    cfg.s = s;
    cfg.t = t;
    cfg.tol = tol;
    cfg.refine = refine;
    cfg.n = parse_n(n_text);
    if (*verify && !n_text.empty() && !cfg.n) throw Usage("verify needs a numeric --n");
    cfg.out = out.empty() ? std::string(*derive ? "ttomo-derive.json" : "ttomo-report.json") : out;
    validate(cfg);
    if (*derive) {
      cfg.suite = "derive";
      return cmd_derive(cfg);
    }
    return cmd_verify(cfg);
  } catch (const Usage& e) {
    std::cerr << "ttomo: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "ttomo: error: " << e.what() << "\n";
    return 1;
  }
}
