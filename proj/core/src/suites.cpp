#include "tensortomo/suites.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "tensortomo/fixtures.hpp"
#include "tensortomo/opcalc.hpp"
#include "tensortomo/raykit.hpp"
#include "tensortomo/spherecalc.hpp"
#include "tensortomo/spheregrid.hpp"
#include "tensortomo/symtensor.hpp"
#include "tensortomo/testfields.hpp"

namespace tt {

bool SuiteResult::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return !c.asserted || c.pass; });
}

int SuiteResult::pass_count() const {
  return static_cast<int>(std::count_if(checks.begin(), checks.end(),
                                        [](const CheckResult& c) { return c.asserted && c.pass; }));
}

int SuiteResult::asserted_count() const {
  return static_cast<int>(
      std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return c.asserted; }));
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"symbolic-regression", "lemma51-oracle",
                                                 "sphere-identities", "slice", "isometry"};
  return names;
}

std::vector<SuiteResult> run_suite(const std::string& name, const RunConfig& cfg) {
  if (name == "all") {
    std::vector<SuiteResult> out;
    for (const auto& s : suite_names()) out.push_back(run_suite(s, cfg).front());
    return out;
  }
  if (name == "symbolic-regression") return {suite_symbolic_regression(cfg)};
  if (name == "lemma51-oracle") return {suite_contraction_oracle(cfg)};
  if (name == "sphere-identities") return {suite_sphere_identities(cfg)};
  if (name == "slice") return {suite_slice(cfg)};
  if (name == "isometry") return {suite_isometry(cfg)};
  throw std::invalid_argument("unknown suite '" + name + "'");
}

namespace {

std::string fmt(const char* f, int a) {
  char buf[96];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

std::string fmt(const char* f, int a, int b) {
  char buf[96];
  std::snprintf(buf, sizeof buf, f, a, b);
  return buf;
}

std::string fmt(const char* f, int a, int b, int c) {
  char buf[96];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

CheckResult bound(std::string name, std::string kind, double value, double tol) {
  CheckResult c;
  c.name = std::move(name);
  c.kind = std::move(kind);
  c.value = value;
  c.tol = tol;
  c.pass = std::isfinite(value) && value <= tol;
  return c;
}

CheckResult exact(const CompareEntry& e) {
  CheckResult c;
  c.name = e.name;
  c.kind = "exact";
  c.value = static_cast<double>(e.diffs.size());
  c.tol = 0;
  c.pass = e.match;
  if (!e.match && !e.diffs.empty()) c.note = "first differing word: " + e.diffs.front().word;
  return c;
}

std::vector<int> range_or(const std::optional<int>& v, int lo, int hi) {
  if (v) return {*v};
  std::vector<int> out;
  for (int i = lo; i <= hi; ++i) out.push_back(i);
  return out;
}

// unit norm under the full contraction
SymTensor random_tensor(int n, int m, std::mt19937_64& rng) {
  std::normal_distribution<double> nd;
  SymTensor t(n, m);
  for (int s = 0; s < t.size(); ++s) t[s] = cplx(nd(rng), nd(rng));
  t *= 1.0 / std::sqrt(dot(t, t).real());
  return t;
}

// Tangential projection of a random polynomial field of degree <= deg.
TangentField random_sphere_field(GridPtr g, int m, int deg, std::mt19937_64& rng) {
  const int n = g->n();
  std::normal_distribution<double> nd;
  std::vector<std::vector<int>> exps;
  std::vector<int> e(n, 0);
  auto rec = [&](auto&& self, int k, int left) -> void {
    if (k == n) {
      exps.push_back(e);
      return;
    }
    for (int p = 0; p <= left; ++p) {
      e[k] = p;
      self(self, k + 1, left - p);
    }
    e[k] = 0;
  };
  rec(rec, 0, deg);
  const int d = static_cast<int>(dim(n, m));
  std::vector<std::vector<cplx>> coef(d, std::vector<cplx>(exps.size()));
  for (auto& row : coef)
    for (auto& c : row) c = cplx(nd(rng), nd(rng));
  TangentField f = sample(g, m, [&](const Eigen::VectorXd& y) {
    SymTensor t(n, m);
    for (int s = 0; s < d; ++s) {
      cplx acc = 0;
      for (size_t q = 0; q < exps.size(); ++q) {
        double mono = 1;
        for (int k = 0; k < n; ++k) mono *= std::pow(y[k], exps[q][k]);
        acc += coef[s][q] * mono;
      }
      t[s] = acc;
    }
    return t;
  });
  return tangential_project(f);
}

double rel(cplx a, cplx b) {
  const double s = std::max(std::abs(a), std::abs(b));
  return s > 0 ? std::abs(a - b) / s : 0.0;
}

}  // namespace

// ---------------------------------------------------------------------------

SuiteResult suite_symbolic_regression(const RunConfig& cfg) {
  SuiteResult out;
  out.suite = "symbolic-regression";
  for (int r : range_or(cfg.r, 0, 2)) {
    for (int m : range_or(cfg.m, 0, 5)) {
      for (const auto& e : reference_compare(m, r).entries) out.checks.push_back(exact(e));
    }
    if (r == 1 && !cfg.m)
      for (const auto& e : compare_p1(6).entries) out.checks.push_back(exact(e));
  }
  if (!cfg.r || *cfg.r == 2) {
    const NCPoly at = a_tilde(2, 2, 1), a = a_operator(2, 2, 1);
    CheckResult w1;
    w1.name = "adjoint(A~(2,2,1)) != A~(2,2,1)";
    w1.kind = "exact";
    w1.pass = adjoint(at) != at;
    w1.value = w1.pass ? 0 : 1;
    out.checks.push_back(w1);
    CheckResult w2;
    w2.name = "adjoint(A(2,2,1)) == A(2,2,1)";
    w2.kind = "exact";
    w2.pass = adjoint(a) == a;
    w2.value = w2.pass ? 0 : static_cast<double>((adjoint(a) - a).size());
    out.checks.push_back(w2);
  }
  return out;
}

SuiteResult suite_contraction_oracle(const RunConfig& cfg) {
  SuiteResult out;
  out.suite = "lemma51-oracle";
  const double tol = cfg.tol.value_or(1e-12);
  std::mt19937_64 rng(cfg.seed);
  std::vector<int> ns = cfg.n ? std::vector<int>{*cfg.n} : std::vector<int>{2, 3};
  for (int n : ns) {
    if (n < 2) throw std::invalid_argument("lemma51-oracle needs n >= 2");
    for (int m : range_or(cfg.m, 0, 4)) {
      for (int k = -2; k <= 2; ++k) {
        if (m + 2 * k < 0) continue;
        double worst = 0;
        for (int trial = 0; trial < 100; ++trial) {
          const SymTensor g = random_tensor(n, m + 2 * k, rng), h = random_tensor(n, m, rng);
          SymTensor cg(n, m);
          for (int p = std::max(0, -k); 2 * p <= m; ++p) {
            const double a = a_coef(p, m, k).get_d();
            if (a == 0) continue;
            SymTensor term = apply_ij(g, p, p + k);
            term *= a;
            cg += term;
          }
          const cplx lhs = c_contract_oracle(g, h), rhs = dot(cg, h);
          worst = std::max(worst, std::abs(lhs - rhs));
        }
        out.checks.push_back(bound(fmt("C(%d,%d) n=%d", m, k, n), "residual", worst, tol));
      }
    }
  }
  return out;
}

SuiteResult suite_sphere_identities(const RunConfig& cfg) {
  SuiteResult out;
  out.suite = "sphere-identities";
  std::mt19937_64 rng(cfg.seed + 7);
  std::vector<int> ns = cfg.n ? std::vector<int>{*cfg.n} : std::vector<int>{2, 3};
  for (int n : ns) {
    if (n != 2 && n != 3) throw std::invalid_argument("sphere grids exist for n = 2, 3");
    GridPtr g = n == 2 ? SphereGrid::circle(cfg.circle_nodes) : SphereGrid::sphere(cfg.sphere_rings);
    const std::string tag = n == 2 ? fmt("S1[%d]", g->size()) : fmt("S2[%dx%d]", g->rings(), g->ring_size());

    const TangentField u = random_sphere_field(g, 2, 3, rng), v = random_sphere_field(g, 3, 3, rng);
    const TangentField w = random_sphere_field(g, 4, 2, rng);
    out.checks.push_back(bound(tag + " <du,v> = -<u,delta v>", "residual",
                               rel(sphere_inner(inner_d(u), v), -sphere_inner(u, divergence(v))),
                               cfg.tol.value_or(1e-8)));
    out.checks.push_back(bound(tag + " <iu,w> = <u,jw>", "residual",
                               rel(sphere_inner(metric_i(u), w), sphere_inner(u, trace_j(w))),
                               cfg.tol.value_or(1e-8)));

    for (int l = 1; l <= 3; ++l) {
      TangentField f = sample(g, 0, [&](const Eigen::VectorXd& y) {
        SymTensor t(n, 0);
        // degree-l harmonic polynomials
        if (n == 2) t[0] = l == 1 ? y[0] : (l == 2 ? y[0] * y[1] : y[0] * y[0] * y[0] - 3 * y[0] * y[1] * y[1]);
        else t[0] = l == 1 ? y[0] : (l == 2 ? y[0] * y[1] : y[0] * y[1] * y[2]);
        return t;
      });
      TangentField res = divergence(inner_d(f)) + double(l * (l + n - 2)) * f;
      out.checks.push_back(bound(tag + fmt(" delta d = -l(l+n-2), l=%d", l), "residual",
                                 res.max_abs() / f.max_abs(), cfg.tol.value_or(1e-5)));
    }
    const TangentField f0 = random_sphere_field(g, 0, 3, rng);
    const double q = sphere_inner(apply_ncpoly(NCPoly::monomial(0, Word::parse("j d^2"), DimRational(-1)), f0), f0).real();
    CheckResult nn = bound(tag + " <-j d^2 f, f> >= 0", "min_eig", -q, 0.0);
    nn.extra = {{"form", q}};
    out.checks.push_back(nn);

    if (n == 3) {
      const JD2Identities id = jd2_identity_check(u);
      const double tol = cfg.tol.value_or(1e-6);
      out.checks.push_back(bound(tag + " j d^2 identity", "residual", id.jd2, tol));
      out.checks.push_back(bound(tag + " j^2 d^2 identity", "residual", id.j2d2, tol));
      out.checks.push_back(bound(tag + " D^(2) two forms", "residual", id.d2form, tol));
    }
  }

  if (!cfg.n || *cfg.n == 3) {
    std::normal_distribution<double> nd;
    for (int mk = 0; mk <= 3; ++mk) {
      double worst = 0;
      for (int trial = 0; trial < 4; ++trial) {
        Eigen::Vector3d y(nd(rng), nd(rng), nd(rng));
        if (trial == 0) y = Eigen::Vector3d(0, 0, 1);
        worst = std::max(worst, sphere_slice_integral_check(y, mk, 2048));
      }
      out.checks.push_back(bound(fmt("slice integral over S2 cut by y_perp, m+k=%d", mk), "residual", worst,
                                 cfg.tol.value_or(1e-6)));
    }

    // Gram matrices of A over random tangential fields
    GridPtr g = SphereGrid::sphere(cfg.gram_rings);
    std::vector<std::pair<int, int>> cases;
    for (int m = 0; m <= 2; ++m)
      for (int r = 0; r <= 2; ++r) cases.emplace_back(m, r);
    auto gram = [&](int m, const NCPoly& A) {
      std::vector<TangentField> us, Aus;
      for (int a = 0; a < cfg.gram_fields; ++a) {
        TangentField f = random_sphere_field(g, m, 3, rng);
        f *= 1.0 / std::sqrt(sphere_inner(f, f).real());
        Aus.push_back(apply_ncpoly(A, f));
        us.push_back(std::move(f));
      }
      const int K = cfg.gram_fields;
      Eigen::MatrixXcd G(K, K);
      for (int a = 0; a < K; ++a)
        for (int b = 0; b < K; ++b) G(a, b) = sphere_inner(Aus[a], us[b]);
      const double asym = (G - G.adjoint()).norm() / std::max(1e-300, G.norm());
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(0.5 * (G + G.adjoint()));
      return std::tuple<double, double, double>(es.eigenvalues().minCoeff(), es.eigenvalues().maxCoeff(), asym);
    };
    for (auto [m, r] : cases) {
      if (cfg.m && *cfg.m != m) continue;
      if (cfg.r && *cfg.r != r) continue;
      std::vector<int> ls = r == 0 ? std::vector<int>{0} : std::vector<int>{0, r};
      for (int l : ls) {
        auto [mn, mx, asym] = gram(m, a_operator(m, r, l));
        CheckResult c = bound(fmt("Gram A(%d,%d,%d) on S2: -min eig", m, r, l), "min_eig", -mn,
                              cfg.tol.value_or(1e-8));
        c.pass = c.pass && asym <= 1e-8;
        c.extra = {{"min_eig", mn}, {"max_eig", mx}, {"asymmetry", asym}};
        out.checks.push_back(c);
      }
    }
    for (int m : {3, 4}) {
      if (cfg.m && *cfg.m != m) continue;
      auto [mn, mx, asym] = gram(m, a_operator(m, 1, 1));
      CheckResult c;
      c.name = fmt("Gram A(%d,1,1) on S2 (reported)", m);
      c.kind = "report";
      c.value = mn;
      c.asserted = false;
      c.pass = mn >= -1e-8;
      c.extra = {{"min_eig", mn}, {"max_eig", mx}, {"asymmetry", asym}};
      out.checks.push_back(c);
    }
  }
  return out;
}

namespace {

LineGrid line_grid(const RunConfig& cfg, int scale = 1) {
  LineGrid g;
  g.directions = cfg.grid_dirs * scale;
  g.offsets = cfg.grid_offsets * scale;
  g.radius = cfg.extent;
  return g;
}

GaussPoly potential(int m, std::uint64_t seed) {
  std::mt19937_64 rng(seed + 1000 + 101 * m);
  return random_gauss_poly(2, 2, rng);
}

}  // namespace

SuiteResult suite_slice(const RunConfig& cfg) {
  SuiteResult out;
  out.suite = "slice";
  if (cfg.n && *cfg.n != 2) throw std::invalid_argument("the slice suite runs in n = 2");
  const LineGrid lg = line_grid(cfg);
  const double L = cfg.extent;
  const int N = cfg.grid_volume;

  {
    VolumeField f = sample_volume(TestField{2, 0, {GaussPoly::gaussian(2)}}, L, N);
    RaySample phi = ray_transform(f, lg);
    out.checks.push_back(bound("gaussian m=0 slice", "residual", slice_check(f, phi), cfg.tol.value_or(1e-4)));
  }
  for (int m : range_or(cfg.m, 0, 2)) {
    std::mt19937_64 rng(cfg.seed + 31 * m);
    // general (non-solenoidal) Gaussian-envelope field
    VolumeField gen = sample_volume(random_field(2, m, 2, rng), L, N);
    RaySample pg = ray_transform(gen, lg);
    out.checks.push_back(bound(fmt("random field m=%d slice", m), "residual", slice_check(gen, pg),
                               cfg.tol.value_or(1e-3)));

    VolumeField sol = sample_volume(curl_field(m, potential(m, cfg.seed)), L, N);
    RaySample ps = ray_transform(sol, lg);
    FourierEvaluator fh(sol);
    out.checks.push_back(bound(fmt("curl field m=%d slice", m), "residual", slice_check(fh, ps),
                               cfg.tol.value_or(1e-3)));
    for (int r : range_or(cfg.r, 0, 2))
      out.checks.push_back(bound(fmt("curl field m=%d: delta_xi^%d vs P^(%d,k)", m, r, r), "residual",
                                 cross_path_check(fh, ps, r), cfg.tol.value_or(1e-3)));

    out.checks.push_back(bound(fmt("m=%d Xi adjoint identity", m), "residual", xi_adjoint_check(ps, pg),
                               cfg.tol.value_or(1e-4)));
    const RaySample dphi = delta_xi(ps);
    const double form = l2_pairing(dphi, ps).real();
    const double scale = l2_pairing(ps, ps).real();
    CheckResult pos = bound(fmt("m=%d (Delta_xi phi, phi) >= 0", m), "min_eig", -form / scale, 1e-8);
    pos.extra = {{"form", form}, {"norm2", scale}};
    out.checks.push_back(pos);
    out.checks.push_back(bound(fmt("m=%d parity of If and Delta_xi If", m), "residual",
                               std::max(ps.parity_residual(), dphi.parity_residual()), 1e-12));
  }
  return out;
}

SuiteResult suite_isometry(const RunConfig& cfg) {
  SuiteResult out;
  out.suite = "isometry";
  if (cfg.n && *cfg.n != 2) throw std::invalid_argument("the isometry suite runs in n = 2");
  const double L = cfg.extent;
  std::vector<std::pair<double, double>> st;
  if (cfg.s || cfg.t) st.emplace_back(cfg.s.value_or(0.0), cfg.t.value_or(0.0));
  else st = {{0.0, 0.0}, {1.0, 0.0}};
  const double tol = cfg.tol.value_or(0.02);

  std::vector<int> scales = {1};
  if (cfg.refine) scales.push_back(2);
  for (int sc : scales) {
    const int N = cfg.grid_volume * sc;
    const LineGrid lg = line_grid(cfg, sc);
    const std::string grid = sc == 1 ? "default" : "doubled";
    const double gtol = sc == 1 ? tol : cfg.tol.value_or(0.01);
    if ((!cfg.m || *cfg.m == 0) && (!cfg.r || *cfg.r == 0)) {
      VolumeField f = sample_volume(TestField{2, 0, {GaussPoly::gaussian(2)}}, L, N);
      auto rep = reshetnyak_check(f, ray_transform(f, lg), 0, 0.0, 0.0);
      const double dev = std::max(std::abs(rep.lhs - std::numbers::pi), std::abs(rep.rhs - std::numbers::pi));
      CheckResult c = bound("gaussian anchor, both sides = pi (" + grid + ")", "rel_err",
                            dev / std::numbers::pi, 0.01);
      c.extra = {{"lhs", rep.lhs}, {"rhs", rep.rhs}, {"pi", std::numbers::pi}};
      out.checks.push_back(c);
    }
    for (int m : range_or(cfg.m, 0, 2)) {
      VolumeField f = sample_volume(curl_field(m, potential(m, cfg.seed)), L, N);
      const RaySample phi = ray_transform(f, lg);
      for (int r : range_or(cfg.r, 0, 2))
        for (auto [s, t] : st) {
          auto rep = reshetnyak_check(f, phi, r, s, t);
          char name[128];
          std::snprintf(name, sizeof name, "m=%d r=%d s=%g t=%g (%s)", m, r, s, t, grid.c_str());
          CheckResult c = bound(name, "rel_err", rep.rel_err, gtol);
          c.extra = {{"lhs", rep.lhs}, {"rhs", rep.rhs}};
          out.checks.push_back(c);
        }
    }
  }
  return out;
}

}  // namespace tt
