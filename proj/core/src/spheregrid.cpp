#include "tensortomo/spheregrid.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "tensortomo/quadrature.hpp"

namespace tt {

std::shared_ptr<const SphereGrid> SphereGrid::circle(int M) {
  if (M < 8 || M % 2 != 0) throw std::invalid_argument("circle grid needs an even count >= 8");
  auto g = std::shared_ptr<SphereGrid>(new SphereGrid());
  g->n_ = 2;
  g->nt_ = 1;
  g->np_ = M;
  g->area_ = 2 * std::numbers::pi;
  g->y_.resize(M, 2);
  g->w_ = Eigen::VectorXd::Constant(M, 2 * std::numbers::pi / M);
  g->phi_.resize(M);
  for (int a = 0; a < M; ++a) {
    const double t = 2 * std::numbers::pi * a / M;
    g->phi_[a] = t;
    g->y_(a, 0) = std::cos(t);
    g->y_(a, 1) = std::sin(t);
  }
  g->d_ring_ = trig_diff_matrix_uniform(M);
  return g;
}

std::shared_ptr<const SphereGrid> SphereGrid::sphere(int nt) {
  if (nt < 4) throw std::invalid_argument("sphere grid needs at least 4 rings");
  auto g = std::shared_ptr<SphereGrid>(new SphereGrid());
  const int np = 2 * nt;
  g->n_ = 3;
  g->nt_ = nt;
  g->np_ = np;
  g->area_ = 4 * std::numbers::pi;
  GaussRule gl = gauss_legendre(nt);
  g->theta_.resize(nt);
  for (int j = 0; j < nt; ++j) g->theta_[j] = std::acos(-gl.x[j]);  // increasing colatitude
  g->phi_.resize(np);
  for (int k = 0; k < np; ++k) g->phi_[k] = 2 * std::numbers::pi * k / np;
  g->y_.resize(nt * np, 3);
  g->w_.resize(nt * np);
  for (int j = 0; j < nt; ++j) {
    const double st = std::sin(g->theta_[j]), ct = std::cos(g->theta_[j]);
    for (int k = 0; k < np; ++k) {
      const int i = j * np + k;
      g->y_(i, 0) = st * std::cos(g->phi_[k]);
      g->y_(i, 1) = st * std::sin(g->phi_[k]);
      g->y_(i, 2) = ct;
      g->w_(i) = gl.w[nt - 1 - j] * 2 * std::numbers::pi / np;
    }
  }
  g->d_ring_ = trig_diff_matrix_uniform(np);
  // meridian angle t: theta_j on the k side, 2 pi - theta_j on the k + np/2 side
  std::vector<double> t(2 * nt);
  for (int j = 0; j < nt; ++j) {
    t[j] = g->theta_[j];
    t[nt + j] = 2 * std::numbers::pi - g->theta_[nt - 1 - j];
  }
  g->d_meridian_ = trig_diff_matrix(t, nt - 1);
  return g;
}

std::vector<Eigen::MatrixXcd> SphereGrid::grad(const Eigen::MatrixXcd& vals) const {
  const int C = static_cast<int>(vals.cols());
  if (vals.rows() != size()) throw std::invalid_argument("grad: value count does not match the grid");
  std::vector<Eigen::MatrixXcd> out(n_, Eigen::MatrixXcd(size(), C));
  if (n_ == 2) {
    Eigen::MatrixXcd dt = d_ring_.cast<cplx>() * vals;
    for (int a = 0; a < size(); ++a) {
      out[0].row(a) = -y_(a, 1) * dt.row(a);
      out[1].row(a) = y_(a, 0) * dt.row(a);
    }
    return out;
  }
  const int nt = nt_, np = np_;
  Eigen::MatrixXcd dphi(size(), C), dtheta(size(), C);
  const Eigen::MatrixXcd dr = d_ring_.cast<cplx>();
  for (int j = 0; j < nt; ++j) dphi.middleRows(j * np, np) = dr * vals.middleRows(j * np, np);
  const Eigen::MatrixXcd dm = d_meridian_.cast<cplx>();
  Eigen::MatrixXcd buf(2 * nt, C);
  for (int k = 0; k < np / 2; ++k) {
    const int k2 = k + np / 2;
    for (int j = 0; j < nt; ++j) {
      buf.row(j) = vals.row(j * np + k);
      buf.row(nt + j) = vals.row((nt - 1 - j) * np + k2);
    }
    Eigen::MatrixXcd d = dm * buf;
    for (int j = 0; j < nt; ++j) {
      dtheta.row(j * np + k) = d.row(j);
      dtheta.row((nt - 1 - j) * np + k2) = -d.row(nt + j);
    }
  }
  for (int j = 0; j < nt; ++j) {
    const double st = std::sin(theta_[j]), ct = std::cos(theta_[j]);
    for (int k = 0; k < np; ++k) {
      const int i = j * np + k;
      const double cp = std::cos(phi_[k]), sp = std::sin(phi_[k]);
      // e_theta = (ct cp, ct sp, -st), e_phi = (-sp, cp, 0)
      out[0].row(i) = ct * cp * dtheta.row(i) - sp / st * dphi.row(i);
      out[1].row(i) = ct * sp * dtheta.row(i) + cp / st * dphi.row(i);
      out[2].row(i) = -st * dtheta.row(i);
    }
  }
  return out;
}

}  // namespace tt
