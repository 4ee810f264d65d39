#include "tensortomo/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace tt {

GaussRule gauss_legendre(int count) {
  if (count < 1) throw std::invalid_argument("gauss_legendre needs at least one node");
  GaussRule g;
  g.x.resize(count);
  g.w.resize(count);
  for (int i = 0; i < (count + 1) / 2; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (count + 0.5));
    double pp = 1;
    for (int it = 0; it < 100; ++it) {
      double p1 = 1, p2 = 0;
      for (int j = 1; j <= count; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2 * j - 1) * z * p2 - (j - 1) * p3) / j;
      }
      pp = count * (z * p1 - p2) / (z * z - 1);
      const double z1 = z;
      z = z1 - p1 / pp;
      if (std::abs(z - z1) < 1e-15) break;
    }
    g.x[i] = -z;
    g.x[count - 1 - i] = z;
    g.w[i] = g.w[count - 1 - i] = 2 / ((1 - z * z) * pp * pp);
  }
  return g;
}

GaussRule gauss_legendre(int count, double a, double b) {
  GaussRule g = gauss_legendre(count);
  for (int i = 0; i < count; ++i) {
    g.x[i] = 0.5 * (b - a) * g.x[i] + 0.5 * (a + b);
    g.w[i] *= 0.5 * (b - a);
  }
  return g;
}

Eigen::MatrixXd trig_diff_matrix(const std::vector<double>& t, int K) {
  const int M = static_cast<int>(t.size());
  if (2 * K + 1 > M) throw std::invalid_argument("trig_diff_matrix: degree too high for the sample count");
  Eigen::MatrixXd V(M, 2 * K + 1), Vd(M, 2 * K + 1);
  for (int a = 0; a < M; ++a) {
    V(a, 0) = 1;
    Vd(a, 0) = 0;
    for (int k = 1; k <= K; ++k) {
      V(a, 2 * k - 1) = std::cos(k * t[a]);
      V(a, 2 * k) = std::sin(k * t[a]);
      Vd(a, 2 * k - 1) = -k * std::sin(k * t[a]);
      Vd(a, 2 * k) = k * std::cos(k * t[a]);
    }
  }
  // coefficients = pinv(V) * f
  Eigen::MatrixXd pinv = V.completeOrthogonalDecomposition().pseudoInverse();
  return Vd * pinv;
}

Eigen::MatrixXd trig_diff_matrix_uniform(int M) {
  std::vector<double> t(M);
  for (int a = 0; a < M; ++a) t[a] = 2 * std::numbers::pi * a / M;
  return trig_diff_matrix(t, M / 2 - 1);
}

}  // namespace tt
