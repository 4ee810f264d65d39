#include <cmath>
#include <numbers>

#include "tensortomo/fourier.hpp"
#include "tensortomo/opcalc.hpp"
#include "tensortomo/quadrature.hpp"
#include "tensortomo/raykit.hpp"
#include "tensortomo/spherecalc.hpp"
#include "tensortomo/spheregrid.hpp"

namespace tt {

namespace {

constexpr double kPi = std::numbers::pi;

double binom(int r, int l) {
  double b = 1;
  for (int i = 1; i <= l; ++i) b = b * (r - l + i) / i;
  return b;
}

}  // namespace

double norm_hrst_ts(const RaySample& phi, int r, double s, double t, int pad) {
  const int n = 2;
  if (r < 0) throw std::invalid_argument("r must be nonnegative");
  if (!(t > -(n - 1) / 2.0)) throw std::invalid_argument("t must exceed -(n-1)/2");
  const RaySample P = phi.dual ? phi : fourier_ray(phi, pad);
  const int M = static_cast<int>(P.values.rows()), K = P.count();
  Eigen::MatrixXcd C = P.values;
  periodic_dft(C.data(), M, K, 1, M, -1);

  // per-sigma angular sums  sum_l binom(r,l) sum_k k^(2l) |C_k|^2
  Eigen::VectorXd ang = Eigen::VectorXd::Zero(K);
  for (int k = 0; k < M; ++k) {
    const int q = 2 * k == M ? 0 : (k < M / 2 ? k : k - M);
    double w = 0;
    for (int l = 0; l <= r; ++l) w += binom(r, l) * std::pow(double(q) * q, l);
    ang += w * C.row(k).cwiseAbs2().transpose();
  }
  ang *= 2 * kPi / (double(M) * M);

  const double ds = P.dsigma, alpha = 2 * t;
  double sum = 0;
  for (int k = 0; k < K; ++k) {
    const double sg = P.sigma(k);
    double w;
    if (sg == 0) {
      // generalized Euler-Maclaurin correction for |sigma|^alpha
      w = alpha == 0 ? 1.0 : -2 * std::riemann_zeta(-alpha) * std::pow(ds, alpha);
    } else {
      w = std::pow(std::abs(sg), alpha) * std::pow(1 + sg * sg, s - t);
    }
    sum += w * ang(k);
  }
  const double cn = std::tgamma((n - 1) / 2.0) / (4 * std::pow(kPi, (n + 1) / 2.0));
  return cn * sum * ds;
}

double norm_hst_ts(const RaySample& phi, double s, double t, int pad) {
  return norm_hrst_ts(phi, 0, s, t, pad);
}

double norm_solenoidal(const VolumeField& f, int r, double s, double t, const SolenoidalOptions& opt) {
  if (f.n != 2) throw ConfigError("norm_solenoidal supports n = 2");
  if (!(t > -f.n / 2.0)) throw std::invalid_argument("t must exceed -n/2");
  if (r < 0) throw std::invalid_argument("r must be nonnegative");
  const int m = f.m;
  FourierEvaluator fh(f, std::max(14.0, opt.radial_max + 1));
  auto circle = SphereGrid::circle(opt.circle_nodes);
  std::vector<NCPoly> A;
  for (int l = 0; l <= r; ++l) A.push_back(a_operator(m, r, l));
  const GaussRule rule = gauss_legendre(opt.radial_nodes, 0.0, std::sqrt(opt.radial_max));

  std::vector<TangentField> shells;
  double scale = 0;
  for (int q = 0; q < opt.radial_nodes; ++q) {
    const double rho = rule.x[q] * rule.x[q];
    shells.push_back(sample(circle, m, [&](const Eigen::VectorXd& u) {
      const double y[2] = {rho * u[0], rho * u[1]};
      return fh(y);
    }));
    scale = std::max(scale, shells.back().max_abs());
  }
  double sum = 0;
  for (int q = 0; q < opt.radial_nodes; ++q) {
    TangentField& g = shells[q];
    const double normal = g.normal_residual() * g.max_abs();
    if (scale > 0 && normal > opt.tangential_tol * scale)
      throw ValidationError("f-hat is not tangential: residual " + std::to_string(normal / scale));
    g = tangential_project(g);
    const double u = rule.x[q], rho = u * u;
    for (int l = 0; l <= r; ++l) {
      const double val = sphere_inner(apply_ncpoly(A[l], g, rho), g).real();
      const double w = std::pow(rho, 2 * t + 2 * l + f.n - 1) * std::pow(1 + rho * rho, s - t);
      sum += rule.w[q] * 2 * u * w * val;
    }
  }
  return sum;
}

ReshetnyakReport reshetnyak_check(const VolumeField& f, const RaySample& phi, int r, double s,
                                  double t, const SolenoidalOptions& opt) {
  ReshetnyakReport rep;
  rep.m = f.m;
  rep.r = r;
  rep.s = s;
  rep.t = t;
  rep.lhs = norm_solenoidal(f, r, s, t, opt);
  rep.rhs = norm_hrst_ts(phi, r, s + 0.5, t + 0.5);
  const double scale = std::max(std::abs(rep.lhs), std::abs(rep.rhs));
  rep.rel_err = scale > 0 ? std::abs(rep.lhs - rep.rhs) / std::abs(rep.rhs == 0 ? scale : rep.rhs) : 0.0;
  return rep;
}

ReshetnyakReport reshetnyak_check(const VolumeField& f, int r, double s, double t, const LineGrid& g,
                                  const SolenoidalOptions& opt) {
  return reshetnyak_check(f, ray_transform(f, g), r, s, t, opt);
}

double sphere_slice_integral_check(const Eigen::Vector3d& y, int mk, int nodes) {
  if (mk < 0 || mk > 3) throw std::invalid_argument("mk must lie in [0, 3]");
  if (y.norm() == 0) throw std::invalid_argument("y must be nonzero");
  const Eigen::Vector3d u = y.normalized();
  Eigen::Vector3d e1 = u.unitOrthogonal();
  Eigen::Vector3d e2 = u.cross(e1);
  SymTensor acc(3, 2 * mk);
  const auto& lo = acc.lay();
  const double w = 2 * kPi / nodes;
  for (int a = 0; a < nodes; ++a) {
    const double th = 2 * kPi * a / nodes;
    const Eigen::Vector3d xi = std::cos(th) * e1 + std::sin(th) * e2;
    for (int c = 0; c < lo.size(); ++c) {
      double v = w;
      for (int idx : lo.indices[c]) v *= xi[idx];
      acc[c] += v;
    }
  }
  const double pref = 2 * std::tgamma(mk + 0.5) * std::sqrt(kPi) / std::tgamma(mk + 1.0);
  SymTensor ref = eps_power(std::span<const double>(y.data(), 3), mk);
  ref *= pref;
  return (acc - ref).max_abs();
}

}  // namespace tt
