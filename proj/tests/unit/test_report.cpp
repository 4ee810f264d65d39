#include <gtest/gtest.h>

#include <random>

#include "tensortomo/suites.hpp"
#include "tensortomo/testfields.hpp"

using namespace tt;

TEST(Report, EmptyDocument) {
  EXPECT_EQ(render_report_table("{\"suites\": []}"), "no checks recorded\n");
  EXPECT_THROW(render_report_table("not json"), std::invalid_argument);
  EXPECT_THROW(render_report_table("{\"x\": 1}"), std::invalid_argument);
}

TEST(Report, PerSuiteCounts) {
  RunConfig cfg;
  SuiteResult a{"alpha", {}}, b{"beta", {}};
  CheckResult ok{"first", "residual", 1e-9, 1e-6, true, true, {{"lhs", 1.0}, {"rhs", 1.0}}, ""};
  CheckResult bad{"second", "rel_err", 0.5, 0.02, false, true, {}, "too large"};
  CheckResult info{"third", "report", 0.1, 0, false, false, {}, ""};
  a.checks = {ok, bad};
  b.checks = {ok, info};
  EXPECT_FALSE(a.passed());
  EXPECT_TRUE(b.passed());
  EXPECT_EQ(b.asserted_count(), 1);
  const std::string json = render_report_json(cfg, {a, b});
  EXPECT_EQ(json, render_report_json(cfg, {a, b}));
  const std::string table = render_report_table(json);
  EXPECT_NE(table.find("alpha  (1/2 passed)"), std::string::npos);
  EXPECT_NE(table.find("beta  (1/1 passed)"), std::string::npos);
  EXPECT_NE(table.find("FAIL"), std::string::npos);
  EXPECT_NE(table.find("info"), std::string::npos);
  EXPECT_NE(table.find("rel_err"), std::string::npos);
  EXPECT_NE(table.find("summary: 2/3"), std::string::npos);
}

TEST(Report, ConfigEcho) {
  RunConfig cfg;
  cfg.m = 2;
  cfg.tol = 1e-3;
  const std::string j = config_json(cfg);
  EXPECT_NE(j.find("\"m\": 2"), std::string::npos);
  EXPECT_NE(j.find("\"n\": \"symbolic\""), std::string::npos);
  EXPECT_NE(j.find("\"grid_volume\": 256"), std::string::npos);
}

TEST(Suites, Names) {
  RunConfig cfg;
  EXPECT_THROW(run_suite("nope", cfg), std::invalid_argument);
  EXPECT_EQ(suite_names().size(), 5u);
}

TEST(Suites, SymbolicRestricted) {
  RunConfig cfg;
  cfg.r = 0;
  SuiteResult s = run_suite("symbolic-regression", cfg).front();
  EXPECT_EQ(s.asserted_count(), 6);
  EXPECT_TRUE(s.passed());
}

TEST(Suites, LemmaRestricted) {
  RunConfig cfg;
  cfg.m = 2;
  cfg.n = 2;
  SuiteResult s = run_suite("lemma51-oracle", cfg).front();
  EXPECT_TRUE(s.passed());
  EXPECT_EQ(s.asserted_count(), 4);  // k = -1 .. 2
}

TEST(TestFields, GaussPolyCalculus) {
  std::mt19937_64 rng(1);
  GaussPoly p = random_gauss_poly(2, 3, rng);
  const double x[2] = {0.3, -0.8}, h = 1e-5;
  for (int k = 0; k < 2; ++k) {
    double xp[2] = {x[0], x[1]}, xm[2] = {x[0], x[1]};
    xp[k] += h;
    xm[k] -= h;
    const cplx fd = (p.eval(xp) - p.eval(xm)) / (2 * h);
    EXPECT_NEAR(std::abs(p.derivative(k).eval(x) - fd), 0, 1e-7);
    EXPECT_NEAR(std::abs(p.times_x(k).eval(x) - x[k] * p.eval(x)), 0, 1e-14);
  }
  GaussPoly g = GaussPoly::gaussian(2);
  EXPECT_NEAR(std::abs(g.fourier().eval(x) - g.eval(x)), 0, 1e-15);
}

TEST(TestFields, CurlIsTangentialInFourier) {
  std::mt19937_64 rng(2);
  for (int m = 0; m <= 3; ++m) {
    TestField f = curl_field(m, random_gauss_poly(2, 2, rng));
    TestField fh = f.fourier();
    const double y[2] = {0.7, -1.3};
    SymTensor v = fh.at(y);
    // contract one slot with y
    double worst = 0;
    if (m > 0) {
      for (int s = 0; s < static_cast<int>(dim(2, m - 1)); ++s) {
        std::vector<int> idx = layout(2, m - 1)->indices[s];
        cplx acc = 0;
        for (int p = 0; p < 2; ++p) {
          std::vector<int> full = idx;
          full.push_back(p);
          acc += y[p] * v.get(full);
        }
        worst = std::max(worst, std::abs(acc));
      }
    }
    EXPECT_LT(worst, 1e-12) << m;
  }
  EXPECT_THROW(curl_field(1, GaussPoly::gaussian(3)), std::invalid_argument);
}
