#include <gtest/gtest.h>

#include <random>

#include "tensortomo/opcalc.hpp"
#include "tensortomo/symtensor.hpp"

using namespace tt;

namespace {

SymTensor rnd(int n, int m, std::mt19937_64& rng) {
  std::normal_distribution<double> nd;
  SymTensor t(n, m);
  for (int s = 0; s < t.size(); ++s) t[s] = cplx(nd(rng), nd(rng));
  return t;
}

SymTensor basis(int n, std::vector<int> idx) {
  SymTensor t(n, static_cast<int>(idx.size()));
  t.set(idx, 1.0);
  return t;
}

}  // namespace

TEST(SymTensor, Dim) {
  EXPECT_EQ(dim(3, 2), 6);
  EXPECT_EQ(dim(2, 0), 1);
  EXPECT_EQ(dim(4, 3), 20);
  EXPECT_THROW(dim(0, 2), std::invalid_argument);
  EXPECT_THROW(dim(2, -1), std::invalid_argument);
}

TEST(SymTensor, PermutedReadsAgree) {
  std::mt19937_64 rng(1);
  SymTensor t = rnd(3, 3, rng);
  std::vector<int> a = {0, 1, 2};
  const cplx ref = t.get(a);
  do {
    EXPECT_EQ(t.get(a), ref);
  } while (std::next_permutation(a.begin(), a.end()));
}

TEST(SymTensor, Symmetrize) {
  FullTensor f(2, 2);
  const int t12[] = {0, 1};
  f.at(t12) = 1.0;
  const int q[] = {1, 0};
  EXPECT_NEAR(std::abs(symmetrize(f).get(t12) - 0.5), 0, 1e-15);
  EXPECT_NEAR(std::abs(symmetrize(f).get(q) - 0.5), 0, 1e-15);

  FullTensor g(3, 3);
  const int t123[] = {0, 1, 2};
  g.at(t123) = 1.0;
  SymTensor s = symmetrize(g);
  std::vector<int> p = {0, 1, 2};
  do {
    EXPECT_NEAR(std::abs(s.get(p) - 1.0 / 6), 0, 1e-15);
  } while (std::next_permutation(p.begin(), p.end()));

  // idempotent
  std::mt19937_64 rng(2);
  SymTensor r = rnd(3, 3, rng);
  EXPECT_LT((symmetrize(r.to_full()) - r).max_abs(), 1e-15);
}

TEST(SymTensor, KronMult) {
  SymTensor one(2, 0);
  one[0] = 1.0;
  SymTensor d = kron_mult_i(one);
  const int i11[] = {0, 0}, i12[] = {0, 1}, i22[] = {1, 1};
  EXPECT_EQ(d.get(i11), 1.0);
  EXPECT_EQ(d.get(i12), 0.0);
  EXPECT_EQ(d.get(i22), 1.0);

  SymTensor e1 = basis(2, {0});
  SymTensor ie = kron_mult_i(e1);
  const int a[] = {0, 0, 0}, b[] = {0, 1, 1};
  EXPECT_NEAR(std::abs(ie.get(a) - 1.0), 0, 1e-15);
  EXPECT_NEAR(std::abs(ie.get(b) - 1.0 / 3), 0, 1e-15);

  for (int n : {2, 3, 4}) {
    SymTensor f(n, 0);
    f[0] = cplx(2, -1);
    EXPECT_NEAR(std::abs(contract_j(kron_mult_i(f))[0] - double(n) * f[0]), 0, 1e-14);
  }
}

TEST(SymTensor, ContractJ) {
  for (int n : {2, 3}) {
    SymTensor one(n, 0);
    one[0] = 1.0;
    EXPECT_NEAR(std::abs(contract_j(kron_mult_i(one))[0] - double(n)), 0, 1e-15);
  }
  SymTensor scalar(2, 1);
  EXPECT_THROW(contract_j(scalar), std::invalid_argument);

  std::mt19937_64 rng(3);
  for (int m = 0; m <= 4; ++m) {
    SymTensor f = rnd(2, m + 2, rng), h = rnd(2, m, rng);
    EXPECT_LT(std::abs(dot(contract_j(f), h) - dot(f, kron_mult_i(h))), 1e-12);
  }
}

TEST(SymTensor, Dot) {
  SymTensor e1 = basis(3, {0}), e2 = basis(3, {1});
  EXPECT_EQ(dot(e1, e1), 1.0);
  EXPECT_EQ(dot(e1, e2), 0.0);
  for (int n : {2, 3, 4}) {
    SymTensor one(n, 0);
    one[0] = 1.0;
    SymTensor d = kron_mult_i(one);
    EXPECT_NEAR(std::abs(dot(d, d) - double(n)), 0, 1e-14);
  }
  EXPECT_THROW(dot(SymTensor(2, 1), SymTensor(3, 1)), std::invalid_argument);
}

TEST(SymTensor, PowerEval) {
  SymTensor s(2, 0);
  s[0] = cplx(1.5, 2);
  const double v[] = {0.3, -0.7};
  EXPECT_EQ(power_eval(s, v), cplx(1.5, 2));

  const double u[] = {0.6, 0.8};
  EXPECT_NEAR(std::abs(power_eval(delta_power(2, 1), u) - 1.0), 0, 1e-15);

  // brute force over all n^m tuples
  SymTensor f = kron_mult_i(basis(2, {0}));
  const double w[] = {1, 1};
  cplx ref = 0;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c) {
        const int t[] = {a, b, c};
        ref += f.get(t) * w[a] * w[b] * w[c];
      }
  EXPECT_NEAR(std::abs(power_eval(f, w) - ref), 0, 1e-14);
  EXPECT_NEAR(std::abs(ref - 2.0), 0, 1e-14);
}

TEST(SymTensor, DeltaPower) {
  EXPECT_EQ(delta_power(3, 0)[0], 1.0);
  SymTensor one(3, 0);
  one[0] = 1.0;
  EXPECT_LT((delta_power(3, 1) - kron_mult_i(one)).max_abs(), 1e-15);
  const int t[] = {0, 0, 1, 1};
  EXPECT_NEAR(std::abs(delta_power(2, 2).get(t) - 1.0 / 3), 0, 1e-15);
}

TEST(SymTensor, EpsPower) {
  const double y[] = {0, 0, 2.0};
  EXPECT_EQ(eps_power(y, 0)[0], 1.0);
  SymTensor p = eps_power(y, 1);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      const int t[] = {a, b};
      const double ref = (a == b && a < 2) ? 1.0 : 0.0;
      EXPECT_NEAR(std::abs(p.get(t) - ref), 0, 1e-15);
    }
  const double z[] = {0, 0, 0};
  EXPECT_THROW(eps_power(z, 1), std::invalid_argument);

  // tangential inputs cannot tell eps from delta
  const double yy[] = {0, 0, 1};
  std::mt19937_64 rng(4);
  for (int mk = 1; mk <= 2; ++mk) {
    SymTensor g(3, 2 * mk);
    std::normal_distribution<double> nd;
    for (int s = 0; s < g.size(); ++s) {
      bool tangential = true;
      for (int idx : g.lay().indices[s]) tangential = tangential && idx != 2;
      if (tangential) g[s] = cplx(nd(rng), nd(rng));
    }
    EXPECT_LT(std::abs(dot(eps_power(yy, mk), g) - dot(delta_power(3, mk), g)), 1e-12);
  }
}

TEST(SymTensor, ContractionOracle) {
  std::mt19937_64 rng(5);
  SymTensor g1 = rnd(3, 1, rng), h1 = rnd(3, 1, rng);
  EXPECT_LT(std::abs(c_contract_oracle(g1, h1) - dot(g1, h1)), 1e-13);
  SymTensor g0 = rnd(2, 0, rng), h0 = rnd(2, 0, rng);
  EXPECT_LT(std::abs(c_contract_oracle(g0, h0) - g0[0] * std::conj(h0[0])), 1e-14);
  SymTensor g = rnd(3, 2, rng), h = rnd(3, 2, rng);
  SymTensor cg = (2.0 / 3) * g + (1.0 / 3) * apply_ij(g, 1, 1);
  EXPECT_LT(std::abs(c_contract_oracle(g, h) - dot(cg, h)), 1e-12);
  EXPECT_THROW(c_contract_oracle(rnd(3, 2, rng), rnd(3, 1, rng)), std::invalid_argument);
}

TEST(SymTensor, OracleMatchesExpansion) {
  std::mt19937_64 rng(6);
  for (int n : {2, 3})
    for (int m = 0; m <= 3; ++m)
      for (int k = -1; k <= 1; ++k) {
        if (m + 2 * k < 0) continue;
        SymTensor g = rnd(n, m + 2 * k, rng), h = rnd(n, m, rng);
        SymTensor cg(n, m);
        for (int p = std::max(0, -k); 2 * p <= m; ++p) cg += a_coef(p, m, k).get_d() * apply_ij(g, p, p + k);
        EXPECT_LT(std::abs(c_contract_oracle(g, h) - dot(cg, h)), 1e-10) << n << " " << m << " " << k;
      }
}

TEST(SymTensor, JsonRoundTrip) {
  std::mt19937_64 rng(7);
  SymTensor t = rnd(3, 2, rng);
  SymTensor u = from_json(to_json(t));
  EXPECT_EQ(u.n(), 3);
  EXPECT_EQ(u.m(), 2);
  EXPECT_LT((u - t).max_abs(), 1e-15);
}
