#include "tensortomo/testfields.hpp"

#include <cmath>
#include <stdexcept>

namespace tt {

GaussPoly GaussPoly::gaussian(int n, cplx c) {
  GaussPoly g;
  g.n = n;
  g.coef[std::vector<int>(n, 0)] = c;
  return g;
}

cplx GaussPoly::eval(const double* x) const {
  double r2 = 0;
  for (int k = 0; k < n; ++k) r2 += x[k] * x[k];
  cplx q = 0;
  for (const auto& [e, c] : coef) {
    double mono = 1;
    for (int k = 0; k < n; ++k)
      for (int p = 0; p < e[k]; ++p) mono *= x[k];
    q += c * mono;
  }
  return q * std::exp(-0.5 * r2);
}

GaussPoly& GaussPoly::operator+=(const GaussPoly& o) {
  for (const auto& [e, c] : o.coef) coef[e] += c;
  return *this;
}

GaussPoly& GaussPoly::operator*=(cplx c) {
  for (auto& kv : coef) kv.second *= c;
  return *this;
}

GaussPoly GaussPoly::times_x(int k) const {
  GaussPoly out;
  out.n = n;
  for (const auto& [e, c] : coef) {
    auto f = e;
    ++f[k];
    out.coef[f] += c;
  }
  return out;
}

// d_k (e q) = e (d_k q - x_k q)
GaussPoly GaussPoly::derivative(int k) const {
  GaussPoly out = times_x(k);
  out *= -1.0;
  for (const auto& [e, c] : coef) {
    if (e[k] == 0) continue;
    auto f = e;
    --f[k];
    out.coef[f] += c * double(e[k]);
  }
  return out;
}

// F(x^a e)(y) = i^|a| d^a e(y)
GaussPoly GaussPoly::fourier() const {
  GaussPoly out;
  out.n = n;
  for (const auto& [e, c] : coef) {
    GaussPoly t = gaussian(n, c);
    int deg = 0;
    for (int k = 0; k < n; ++k)
      for (int p = 0; p < e[k]; ++p) {
        t = t.derivative(k);
        ++deg;
      }
    static const cplx ipow[4] = {1.0, cplx(0, 1), -1.0, cplx(0, -1)};
    t *= ipow[deg % 4];
    out += t;
  }
  return out;
}

SymTensor TestField::at(const double* x) const {
  SymTensor t(n, m);
  for (int s = 0; s < t.size(); ++s) t[s] = comps[s].eval(x);
  return t;
}

TestField TestField::fourier() const {
  TestField out{n, m, {}};
  for (const auto& c : comps) out.comps.push_back(c.fourier());
  return out;
}

GaussPoly random_gauss_poly(int n, int degree, std::mt19937_64& rng) {
  std::normal_distribution<double> nd(0.0, 1.0);
  GaussPoly g;
  g.n = n;
  std::vector<int> e(n, 0);
  // all exponent vectors of total degree <= degree
  auto rec = [&](auto&& self, int k, int left) -> void {
    if (k == n) {
      g.coef[e] = cplx(nd(rng), 0.0);
      return;
    }
    for (int p = 0; p <= left; ++p) {
      e[k] = p;
      self(self, k + 1, left - p);
    }
    e[k] = 0;
  };
  rec(rec, 0, degree);
  return g;
}

TestField curl_field(int m, const GaussPoly& w) {
  if (w.n != 2) throw std::invalid_argument("curl_field is defined for n = 2");
  TestField f{2, m, {}};
  const auto& lo = *layout(2, m);
  for (const auto& idx : lo.indices) {
    GaussPoly g = w;
    for (int a : idx) {
      if (a == 0) {
        g = g.derivative(1);
        g *= -1.0;
      } else {
        g = g.derivative(0);
      }
    }
    f.comps.push_back(g);
  }
  return f;
}

TestField random_field(int n, int m, int degree, std::mt19937_64& rng) {
  TestField f{n, m, {}};
  const int d = static_cast<int>(dim(n, m));
  for (int s = 0; s < d; ++s) f.comps.push_back(random_gauss_poly(n, degree, rng));
  return f;
}

TestField gradient_field(const GaussPoly& v) {
  TestField f{v.n, 1, {}};
  for (int k = 0; k < v.n; ++k) f.comps.push_back(v.derivative(k));
  return f;
}

}  // namespace tt
