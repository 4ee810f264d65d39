#include "tensortomo/raykit.hpp"

#include <cmath>
#include <numbers>

#include "tensortomo/fourier.hpp"
#include "tensortomo/opcalc.hpp"
#include "tensortomo/spherecalc.hpp"
#include "tensortomo/spheregrid.hpp"

namespace tt {

namespace {

constexpr double kPi = std::numbers::pi;

// Quintic B-spline weights for taps floor(u) - 2 .. floor(u) + 3.
void quintic_weights(double t, double* w) {
  const double t2 = t * t, t3 = t2 * t, t4 = t3 * t, t5 = t4 * t;
  const double u = 1 - t;
  w[0] = u * u * u * u * u / 120;
  w[1] = (5 * t5 - 20 * t4 + 20 * t3 + 20 * t2 - 50 * t + 26) / 120;
  w[2] = (-10 * t5 + 30 * t4 - 60 * t2 + 66) / 120;
  w[3] = (10 * t5 - 20 * t4 - 20 * t3 + 20 * t2 + 50 * t + 26) / 120;
  w[4] = (-5 * t5 + 5 * t4 + 10 * t3 + 10 * t2 + 5 * t + 1) / 120;
  w[5] = t5 / 120;
}

// Interpolating quintic spline coefficients of one component (periodic).
Eigen::VectorXcd prefilter(const Eigen::VectorXcd& col, int N) {
  Eigen::VectorXcd c = col;
  periodic_dft(c.data(), N, N, 1, N, -1);
  periodic_dft(c.data(), N, N, N, 1, -1);
  std::vector<double> bh(N);
  for (int k = 0; k < N; ++k) {
    const double w = 2 * kPi * k / N;
    bh[k] = (66 + 52 * std::cos(w) + 2 * std::cos(2 * w)) / 120;
  }
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b) c(a * N + b) /= bh[a] * bh[b] * double(N) * double(N);
  periodic_dft(c.data(), N, N, 1, N, +1);
  periodic_dft(c.data(), N, N, N, 1, +1);
  return c;
}

// Signed frequency of DFT bin k; the Nyquist bin is reported as 0.
int signed_freq(int k, int M) {
  if (2 * k == M) return 0;
  return k < M / 2 ? k : k - M;
}

RaySample beta_spectral(const RaySample& phi, const std::function<cplx(int)>& mult) {
  RaySample out = phi;
  const int M = static_cast<int>(phi.values.rows()), C = phi.count();
  periodic_dft(out.values.data(), M, C, 1, M, -1);
  for (int k = 0; k < M; ++k) out.values.row(k) *= mult(signed_freq(k, M)) / double(M);
  periodic_dft(out.values.data(), M, C, 1, M, +1);
  return out;
}

void check_grid(const RaySample& a, const RaySample& b) {
  if (a.values.rows() != b.values.rows() || a.values.cols() != b.values.cols() || a.dual != b.dual)
    throw std::invalid_argument("ray samples live on different grids");
}

}  // namespace

double LineGrid::beta(int a) const { return 2 * kPi * a / directions; }

Eigen::Vector2d LineGrid::xi(int a) const {
  const double b = beta(a);
  return {std::cos(b), std::sin(b)};
}

Eigen::Vector2d LineGrid::xi_perp(int a) const {
  const double b = beta(a);
  return {-std::sin(b), std::cos(b)};
}

Eigen::Vector2d LineGrid::point(int a, int j) const { return offset(j) * xi_perp(a); }

double RaySample::parity_residual() const {
  if (dual) throw std::invalid_argument("parity_residual expects offset-space samples");
  const int M = grid.directions, N = count();
  const double scale = values.cwiseAbs().maxCoeff();
  if (scale == 0) return 0.0;
  const double sgn = m % 2 == 0 ? 1.0 : -1.0;
  double worst = 0;
  for (int a = 0; a < M / 2; ++a)
    for (int j = 1; j < N; ++j)
      worst = std::max(worst, std::abs(values(a + M / 2, j) - sgn * values(a, N - j)));
  return worst / scale;
}

RaySample ray_transform(const VolumeField& f, const LineGrid& g) {
  if (f.n != 2) throw ConfigError("ray_transform supports n = 2");
  if (f.dual) throw std::invalid_argument("ray_transform expects a primal field");
  if (g.radius > f.extent + 1e-12) throw ConfigError("line grid radius exceeds the volume extent");
  if (g.directions % 4 != 0 || g.offsets % 2 != 0)
    throw ConfigError("line grid needs directions divisible by 4 and an even offset count");
  const int N = f.shape, M = g.directions, Ns = g.offsets;
  const double h = f.spacing(), L = f.extent;
  const auto& lo = *layout(2, f.m);

  std::vector<Eigen::VectorXcd> coef;
  for (int c = 0; c < lo.size(); ++c) coef.push_back(prefilter(f.values.col(c), N));

  RaySample out;
  out.grid = g;
  out.m = f.m;
  out.values = Eigen::MatrixXcd::Zero(M, Ns);

  const int steps = N;  // t_k = -L + k h, k = 0..N
  Eigen::VectorXcd cb(N * N);
  auto integrate = [&](int a, int j) {
    const Eigen::Vector2d xi = g.xi(a), p0 = g.point(a, j);
    cplx acc = 0;
    double wx[6], wy[6];
    for (int k = 0; k <= steps; ++k) {
      const double t = -L + k * h;
      const double u0 = (p0[0] + t * xi[0] + L) / h, u1 = (p0[1] + t * xi[1] + L) / h;
      const int i0 = static_cast<int>(std::floor(u0)), i1 = static_cast<int>(std::floor(u1));
      if (i0 + 3 < 0 || i0 - 2 >= N || i1 + 3 < 0 || i1 - 2 >= N) continue;
      quintic_weights(u0 - i0, wx);
      quintic_weights(u1 - i1, wy);
      cplx v = 0;
      for (int p = 0; p < 6; ++p) {
        const int r0 = i0 - 2 + p;
        if (r0 < 0 || r0 >= N) continue;
        cplx row = 0;
        const cplx* base = cb.data() + static_cast<long>(r0) * N;
        for (int q = 0; q < 6; ++q) {
          const int r1 = i1 - 2 + q;
          if (r1 < 0 || r1 >= N) continue;
          row += wy[q] * base[r1];
        }
        v += wx[p] * row;
      }
      acc += (k == 0 || k == steps ? 0.5 : 1.0) * v;
    }
    return acc * h;
  };
  auto contract = [&](int a) {
    const Eigen::Vector2d xi = g.xi(a);
    cb.setZero();
    for (int c = 0; c < lo.size(); ++c) {
      double w = lo.multiplicity[c];
      for (int idx : lo.indices[c]) w *= xi[idx];
      cb += w * coef[c];
    }
  };

  const double sgn = f.m % 2 == 0 ? 1.0 : -1.0;
  for (int a = 0; a < M / 2; ++a) {
    contract(a);
    for (int j = 0; j < Ns; ++j) out.values(a, j) = integrate(a, j);
  }
  for (int a = M / 2; a < M; ++a) {
    contract(a);
    out.values(a, 0) = integrate(a, 0);
    for (int j = 1; j < Ns; ++j) out.values(a, j) = sgn * out.values(a - M / 2, Ns - j);
  }
  return out;
}

RaySample fourier_ray(const RaySample& phi, int pad) {
  if (phi.dual) throw std::invalid_argument("fourier_ray expects offset-space samples");
  if (pad < 1) throw std::invalid_argument("pad must be >= 1");
  const int M = static_cast<int>(phi.values.rows()), N = phi.count(), K = pad * N;
  const double ds = phi.grid.step();
  RaySample out = phi;
  out.dual = true;
  out.dsigma = 2 * kPi / (K * ds);
  out.values = Eigen::MatrixXcd::Zero(M, K);
  out.values.middleCols((K - N) / 2, N) = phi.values;
  centered_dft(out.values.data(), K, M, M, 1, -1);
  out.values *= ds / std::sqrt(2 * kPi);
  return out;
}

RaySample delta_xi(const RaySample& phi) {
  return beta_spectral(phi, [](int k) { return cplx(double(k) * k, 0); });
}

RaySample delta_xi_power(const RaySample& phi, int r) {
  if (r < 0) throw std::invalid_argument("negative power");
  RaySample out = phi;
  for (int i = 0; i < r; ++i) out = delta_xi(out);
  return out;
}

RaySample xi_op(const RaySample& phi, int i) {
  if (i < 0 || i > 1) throw std::invalid_argument("xi_op index out of range");
  RaySample out = beta_spectral(phi, [](int k) { return cplx(0, double(k)); });
  for (int a = 0; a < out.values.rows(); ++a) out.values.row(a) *= phi.grid.xi_perp(a)[i];
  return out;
}

RaySample xi_mult(const RaySample& phi, int i) {
  if (i < 0 || i > 1) throw std::invalid_argument("xi_mult index out of range");
  RaySample out = phi;
  for (int a = 0; a < out.values.rows(); ++a) out.values.row(a) *= phi.grid.xi(a)[i];
  return out;
}

cplx l2_pairing(const RaySample& a, const RaySample& b) {
  check_grid(a, b);
  const double w = (a.dual ? a.dsigma : a.grid.step()) * 2 * kPi / a.values.rows();
  return w * (a.values.array() * b.values.array().conjugate()).sum();
}

double xi_adjoint_check(const RaySample& phi1, const RaySample& phi2) {
  check_grid(phi1, phi2);
  const double n1 = std::sqrt(std::abs(l2_pairing(phi1, phi1)));
  const double n2 = std::sqrt(std::abs(l2_pairing(phi2, phi2)));
  if (n1 == 0 || n2 == 0) return 0.0;
  double worst = 0;
  for (int i = 0; i < 2; ++i) {
    const cplx lhs = l2_pairing(xi_op(phi1, i), phi2) + l2_pairing(phi1, xi_op(phi2, i));
    const cplx rhs = l2_pairing(phi1, xi_mult(phi2, i));  // (n - 1) = 1
    worst = std::max(worst, std::abs(lhs - rhs) / (n1 * n2));
  }
  return worst;
}

double slice_check(const VolumeField& f, const RaySample& phi, Band band) {
  return slice_check(FourierEvaluator(f), phi, band);
}

double slice_check(const FourierEvaluator& fh, const RaySample& phi, Band band) {
  if (fh.m() != phi.m) throw std::invalid_argument("rank mismatch between field and ray sample");
  const RaySample P = fourier_ray(phi, 1);
  const int M = static_cast<int>(P.values.rows());
  double worst = 0, scale = 0;
  for (int a = 0; a < M; ++a) {
    const Eigen::Vector2d xi = P.grid.xi(a), xp = P.grid.xi_perp(a);
    for (int k = 0; k < P.count(); ++k) {
      const double sg = P.sigma(k);
      if (std::abs(sg) < band.lo || std::abs(sg) > band.hi) continue;
      const Eigen::Vector2d y = sg * xp;
      const cplx ref = std::sqrt(2 * kPi) * power_eval(fh(y.data()), std::span<const double>(xi.data(), 2));
      worst = std::max(worst, std::abs(P.values(a, k) - ref));
      scale = std::max(scale, std::abs(ref));
    }
  }
  return scale > 0 ? worst / scale : worst;
}

double cross_path_check(const FourierEvaluator& fh, const RaySample& phi, int r, Band band) {
  if (fh.m() != phi.m) throw std::invalid_argument("rank mismatch between field and ray sample");
  const int m = phi.m;
  const RaySample full = fourier_ray(delta_xi_power(phi, r), 1);
  const int M = static_cast<int>(full.values.rows()), K = full.count();
  auto circle = SphereGrid::circle(M);
  const auto polys = p_polys(r, m);

  std::vector<int> cols;
  for (int k = 0; k < K; ++k) {
    const double sg = std::abs(full.sigma(k));
    if (sg >= band.lo && sg <= band.hi) cols.push_back(k);
  }
  const int C = static_cast<int>(cols.size());
  RaySample lhs = full, rhs = full;
  lhs.values.resize(M, C);
  rhs.values.resize(M, C);
  for (int c = 0; c < C; ++c) lhs.values.col(c) = full.values.col(cols[c]);

  for (int c = 0; c < C; ++c) {
    const double sg = full.sigma(cols[c]), rho = std::abs(sg);
    TangentField g = sample(circle, m, [&](const Eigen::VectorXd& u) {
      const double y[2] = {rho * u[0], rho * u[1]};
      return fh(y);
    });
    g = tangential_project(g);
    std::vector<TangentField> terms;
    for (const auto& [kk, p] : polys) terms.push_back(apply_ncpoly(p, g, rho));
    const int shift = sg > 0 ? M / 4 : 3 * M / 4;  // node of sign(sigma) xi_perp
    for (int a = 0; a < M; ++a) {
      const Eigen::Vector2d xi = full.grid.xi(a);
      const std::span<const double> xs(xi.data(), 2);
      cplx v = 0;
      for (const auto& tf : terms) v += power_eval(tf.at((a + shift) % M), xs);
      rhs.values(a, c) = std::sqrt(2 * kPi) * v;
    }
  }
  // Spectral powers of the angle amplify the roundoff floor of both paths by
  // up to (M/2)^(2r); compare on the resolved modes |k| <= M/4 only.
  auto low_pass = [M](const RaySample& x) {
    return beta_spectral(x, [M](int k) { return cplx(4 * std::abs(k) <= M ? 1.0 : 0.0, 0.0); });
  };
  const Eigen::MatrixXcd a = low_pass(lhs).values, b = low_pass(rhs).values;
  const double scale = b.cwiseAbs().maxCoeff();
  const double worst = (a - b).cwiseAbs().maxCoeff();
  return scale > 0 ? worst / scale : worst;
}

}  // namespace tt
