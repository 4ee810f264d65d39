#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "tensortomo/raykit.hpp"
#include "tensortomo/testfields.hpp"

using namespace tt;

namespace {

constexpr double kPi = std::numbers::pi;

// small grids keep the unit tests quick; the acceptance suite runs the defaults
constexpr double L = 8.0;
constexpr int N = 128;

LineGrid small_lines() {
  LineGrid g;
  g.directions = 128;
  g.offsets = 256;
  g.radius = L;
  return g;
}

VolumeField gauss(double a, int m = 0, int comp = 0) {
  return sample_volume(2, m, L, N, [&](const double* x) {
    SymTensor t(2, m);
    t[comp] = std::exp(-a * (x[0] * x[0] + x[1] * x[1]));
    return t;
  });
}

RaySample constant_ray(const LineGrid& g, int m, const std::function<cplx(double, double)>& fn) {
  RaySample r;
  r.grid = g;
  r.m = m;
  r.values.resize(g.directions, g.offsets);
  for (int a = 0; a < g.directions; ++a)
    for (int j = 0; j < g.offsets; ++j) r.values(a, j) = fn(g.beta(a), g.offset(j));
  return r;
}

}  // namespace

TEST(LineGrid, Orthogonality) {
  LineGrid g = small_lines();
  double worst = 0;
  for (int a = 0; a < g.directions; a += 5)
    for (int j = 0; j < g.offsets; j += 7) {
      worst = std::max(worst, std::abs(g.point(a, j).dot(g.xi(a))));
      worst = std::max(worst, std::abs(g.xi(a).norm() - 1));
    }
  EXPECT_LT(worst, 1e-14);
}

TEST(VolumeField, Fourier) {
  VolumeField f = gauss(0.5);
  VolumeField fh = fourier_volume(f);
  double err = 0;
  for (int p = 0; p < N; ++p)
    for (int q = 0; q < N; ++q) {
      const double y0 = fh.coord(p), y1 = fh.coord(q);
      err = std::max(err, std::abs(fh.values(long(p) * N + q, 0) - std::exp(-0.5 * (y0 * y0 + y1 * y1))));
    }
  EXPECT_LT(err, 1e-8);

  std::mt19937_64 rng(1);
  VolumeField g = sample_volume(random_field(2, 1, 2, rng), L, N);
  const double h = f.spacing(), k = fourier_volume(g).spacing();
  VolumeField gh = fourier_volume(g);
  EXPECT_NEAR(g.values.squaredNorm() * h * h, gh.values.squaredNorm() * k * k, 1e-8 * g.values.squaredNorm() * h * h);

  // linearity
  VolumeField a = gauss(0.5, 1, 0), b = gauss(0.3, 1, 1);
  VolumeField sum = a;
  sum *= cplx(2, 1);
  sum += b;
  VolumeField lhs = fourier_volume(sum), rhs = fourier_volume(a);
  rhs *= cplx(2, 1);
  rhs += fourier_volume(b);
  EXPECT_LT((lhs.values - rhs.values).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_LT((inverse_fourier_volume(fourier_volume(a)).values - a.values).cwiseAbs().maxCoeff(), 1e-13);
}

TEST(VolumeField, Envelope) {
  EXPECT_LT(gauss(0.5).envelope(), 1e-12);
  VolumeField flat = sample_volume(2, 0, L, 16, [](const double*) {
    SymTensor t(2, 0);
    t[0] = 1.0;
    return t;
  });
  EXPECT_NEAR(flat.envelope(), 1.0, 1e-15);
}

TEST(VolumeField, SolenoidalProject) {
  VolumeField s = gauss(0.5);
  EXPECT_LT((solenoidal_project(s).values - s.values).cwiseAbs().maxCoeff(), 1e-12);

  GaussPoly v = GaussPoly::gaussian(2);
  VolumeField grad = sample_volume(gradient_field(v), L, N);
  EXPECT_LT(solenoidal_project(grad).values.cwiseAbs().maxCoeff(), 1e-6 * grad.values.cwiseAbs().maxCoeff());

  std::mt19937_64 rng(2);
  VolumeField curl = sample_volume(curl_field(1, random_gauss_poly(2, 2, rng)), L, N);
  EXPECT_LT((solenoidal_project(curl).values - curl.values).cwiseAbs().maxCoeff(), 1e-6);
  EXPECT_LT(tangential_residual(fourier_volume(curl)), 1e-10);
  EXPECT_GT(tangential_residual(fourier_volume(grad)), 0.1);
}

TEST(VolumeField, FileRoundTrip) {
  VolumeField f = gauss(0.5, 2, 1);
  std::stringstream ss;
  write_volume(ss, f);
  VolumeField g = read_volume(ss);
  EXPECT_EQ(g.m, 2);
  EXPECT_EQ(g.shape, N);
  EXPECT_EQ(g.extent, L);
  EXPECT_EQ((g.values - f.values).cwiseAbs().maxCoeff(), 0.0);
  std::stringstream bad("garbage\n");
  EXPECT_THROW(read_volume(bad), std::runtime_error);
}

TEST(FourierEvaluator, OffGrid) {
  VolumeField f = gauss(0.5);
  FourierEvaluator fh(f);
  for (double y0 : {0.0, 0.37, -1.91, 3.3})
    for (double y1 : {0.11, -2.4}) {
      const double y[2] = {y0, y1};
      EXPECT_NEAR(std::abs(fh(y)[0] - std::exp(-0.5 * (y0 * y0 + y1 * y1))), 0, 1e-9);
    }
}

TEST(RayTransform, Gaussian) {
  const LineGrid g = small_lines();
  RaySample phi = ray_transform(gauss(1.0), g);
  double err = 0;
  for (int a = 0; a < g.directions; ++a)
    for (int j = 0; j < g.offsets; ++j) {
      const double s = g.offset(j);
      err = std::max(err, std::abs(phi.values(a, j) - std::sqrt(kPi) * std::exp(-s * s)));
    }
  EXPECT_LT(err, 1e-6);
  EXPECT_LT(phi.parity_residual(), 1e-14);
}

TEST(RayTransform, ZeroAndMonomial) {
  const LineGrid g = small_lines();
  EXPECT_EQ(ray_transform(VolumeField(2, 1, L, N), g).values.cwiseAbs().maxCoeff(), 0.0);
  // e_1 component seen along e_2: direction index M/4 has xi = (0, 1)
  RaySample phi = ray_transform(gauss(1.0, 1, 0), g);
  EXPECT_LT(phi.values.row(g.directions / 4).cwiseAbs().maxCoeff(), 1e-14);
  EXPECT_GT(phi.values.row(0).cwiseAbs().maxCoeff(), 1.0);
}

TEST(RayTransform, ConfigErrors) {
  LineGrid g = small_lines();
  g.radius = 2 * L;
  EXPECT_THROW(ray_transform(gauss(1.0), g), ConfigError);
  g = small_lines();
  g.directions = 130;
  EXPECT_THROW(ray_transform(gauss(1.0), g), ConfigError);
}

TEST(FourierRay, GaussianAndParity) {
  const LineGrid g = small_lines();
  RaySample phi = ray_transform(gauss(0.5), g);
  RaySample ph = fourier_ray(phi);
  double err = 0;
  for (int a = 0; a < g.directions; ++a)
    for (int k = 0; k < ph.count(); ++k) {
      const double s = ph.sigma(k);
      err = std::max(err, std::abs(ph.values(a, k) - std::sqrt(2 * kPi) * std::exp(-0.5 * s * s)));
    }
  EXPECT_LT(err, 1e-8);
  RaySample zero = phi;
  zero.values.setZero();
  EXPECT_EQ(fourier_ray(zero).values.cwiseAbs().maxCoeff(), 0.0);
}

TEST(SliceTheorem, SmallGrid) {
  const LineGrid g = small_lines();
  VolumeField f = gauss(0.5);
  EXPECT_LT(slice_check(f, ray_transform(f, g)), 1e-4);
  VolumeField z(2, 0, L, N);
  EXPECT_EQ(slice_check(z, ray_transform(z, g)), 0.0);
  std::mt19937_64 rng(3);
  VolumeField f2 = sample_volume(random_field(2, 2, 2, rng), L, N);
  EXPECT_LT(slice_check(f2, ray_transform(f2, g)), 1e-3);
}

TEST(DeltaXi, Examples) {
  const LineGrid g = small_lines();
  RaySample one = constant_ray(g, 0, [](double, double) { return 1.0; });
  EXPECT_LT(delta_xi(one).values.cwiseAbs().maxCoeff(), 1e-12);
  RaySample x1 = constant_ray(g, 1, [](double b, double) { return std::cos(b); });
  EXPECT_LT((delta_xi(x1).values - x1.values).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_LT((delta_xi_power(x1, 2).values - x1.values).cwiseAbs().maxCoeff(), 1e-8);
  EXPECT_EQ((delta_xi_power(x1, 0).values - x1.values).cwiseAbs().maxCoeff(), 0.0);
}

TEST(DeltaXi, AdjointAndPositivity) {
  const LineGrid g = small_lines();
  std::mt19937_64 rng(4);
  RaySample p1 = ray_transform(sample_volume(random_field(2, 1, 2, rng), L, N), g);
  RaySample p2 = ray_transform(sample_volume(random_field(2, 1, 2, rng), L, N), g);
  EXPECT_LT(xi_adjoint_check(p1, p2), 1e-4);
  RaySample z = p2;
  z.values.setZero();
  EXPECT_EQ(xi_adjoint_check(p1, z), 0.0);
  EXPECT_GE(l2_pairing(delta_xi(p1), p1).real(), -1e-8);
  // sum of squares form
  const double viaxi = l2_pairing(xi_op(p1, 0), xi_op(p1, 0)).real() + l2_pairing(xi_op(p1, 1), xi_op(p1, 1)).real();
  EXPECT_NEAR(l2_pairing(delta_xi(p1), p1).real(), viaxi, 1e-8 * viaxi);
}

TEST(Norms, BasicProperties) {
  const LineGrid g = small_lines();
  RaySample phi = ray_transform(gauss(0.5), g);
  const double n0 = norm_hst_ts(phi, 0, 0);
  EXPECT_NEAR(norm_hrst_ts(phi, 0, 0.3, 0.1), norm_hst_ts(phi, 0.3, 0.1), 1e-14);
  RaySample scaled = phi;
  scaled.values *= cplx(0, 3);
  EXPECT_NEAR(norm_hst_ts(scaled, 0, 0), 9 * n0, 1e-10 * n0);
  RaySample z = phi;
  z.values.setZero();
  EXPECT_EQ(norm_hst_ts(z, 0, 0), 0.0);
  for (int r = 1; r <= 2; ++r) EXPECT_GE(norm_hrst_ts(phi, r, 0, 0), n0);
  EXPECT_THROW(norm_hst_ts(phi, 0, -0.5), std::invalid_argument);
  // fractional weight path
  EXPECT_GT(norm_hst_ts(phi, 0, 0.25), 0.0);
  EXPECT_GT(norm_hst_ts(phi, 0, -0.25), 0.0);
}

TEST(Norms, GaussianIsometry) {
  const LineGrid g = small_lines();
  VolumeField f = sample_volume(TestField{2, 0, {GaussPoly::gaussian(2)}}, L, N);
  auto rep = reshetnyak_check(f, 0, 0.0, 0.0, g);
  EXPECT_NEAR(rep.lhs, kPi, 1e-2 * kPi);
  EXPECT_NEAR(rep.rhs, kPi, 1e-2 * kPi);
  EXPECT_LT(rep.rel_err, 0.01);
  VolumeField z(2, 0, L, N);
  auto zr = reshetnyak_check(z, 0, 0.0, 0.0, g);
  EXPECT_EQ(zr.lhs, 0.0);
  EXPECT_EQ(zr.rhs, 0.0);
}

TEST(Norms, CurlFieldOrderOne) {
  const LineGrid g = small_lines();
  std::mt19937_64 rng(5);
  VolumeField f = sample_volume(curl_field(1, random_gauss_poly(2, 2, rng)), L, N);
  auto rep = reshetnyak_check(f, 1, 0.0, 0.0, g);
  EXPECT_LT(rep.rel_err, 0.02);
  auto frac = reshetnyak_check(f, 1, 0.0, 0.25, g);
  EXPECT_LT(frac.rel_err, 0.02);
}

TEST(Norms, RejectsNonTangential) {
  VolumeField grad = sample_volume(gradient_field(GaussPoly::gaussian(2)), L, N);
  EXPECT_THROW(norm_solenoidal(grad, 0, 0, 0), ValidationError);
  EXPECT_THROW(norm_solenoidal(gauss(0.5), 0, 0, -1.5), std::invalid_argument);
}

TEST(SphereSlice, ClosedForm) {
  for (int mk = 0; mk <= 3; ++mk) {
    EXPECT_LT(sphere_slice_integral_check(Eigen::Vector3d(0, 0, 1), mk), 1e-6);
    EXPECT_LT(sphere_slice_integral_check(Eigen::Vector3d(0.3, -1.2, 0.5), mk), 1e-6);
  }
  EXPECT_THROW(sphere_slice_integral_check(Eigen::Vector3d(0, 0, 1), 4), std::invalid_argument);
  EXPECT_THROW(sphere_slice_integral_check(Eigen::Vector3d(0, 0, 0), 1), std::invalid_argument);
}
