#pragma once

#include <Eigen/Dense>
#include <functional>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "tensortomo/ncpoly.hpp"
#include "tensortomo/symtensor.hpp"
#include "tensortomo/testfields.hpp"

namespace tt {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Samples of a rank-m field on the cube [-L, L)^n, x_j = -L + j h, h = 2L/N.
// Rows are voxels with axis 0 slowest; columns are sorted multi-indices.
// A dual field (fourier_volume output) uses the same layout with
// L' = N pi / (2L).
struct VolumeField {
  int n = 2;
  int m = 0;
  double extent = 8.0;
  int shape = 256;
  bool dual = false;
  Eigen::MatrixXcd values;

  VolumeField() = default;
  VolumeField(int n_, int m_, double L, int N);
  double spacing() const { return 2 * extent / shape; }
  double coord(int j) const { return -extent + j * spacing(); }
  long voxels() const;
  // max |f| over the outermost layer relative to max |f| overall
  double envelope() const;
  VolumeField& operator+=(const VolumeField& o);
  VolumeField& operator*=(cplx c);
};

VolumeField sample_volume(int n, int m, double L, int N,
                          const std::function<SymTensor(const double*)>& f);
VolumeField sample_volume(const TestField& f, double L, int N);

VolumeField fourier_volume(const VolumeField& f);
VolumeField inverse_fourier_volume(const VolumeField& fh);

// Projects f-hat onto tangential tensors at every nonzero dual node; the
// origin cell is set to zero.
VolumeField solenoidal_project(const VolumeField& f);

// Largest |y^p fhat_{p...}| relative to max |fhat| over nonzero dual nodes.
double tangential_residual(const VolumeField& fh);

// Header + binary format: text header lines "n m extent shape", a line
// listing the components, then row-major little-endian doubles (re, im).
void write_volume(std::ostream& os, const VolumeField& f);
VolumeField read_volume(std::istream& is);

// Off-grid f-hat for a primal n = 2 volume field: exact DFT onto a fine
// patch followed by windowed-sinc interpolation. Zero outside the patch.
class FourierEvaluator {
 public:
  explicit FourierEvaluator(const VolumeField& f, double radius = 14.0);
  int n() const { return n_; }
  int m() const { return m_; }
  double radius() const { return radius_; }
  SymTensor operator()(const double* y) const;

 private:
  int n_, m_;
  double radius_, step_, origin_;
  int count_;
  std::vector<Eigen::MatrixXcd> patch_;  // per component
};

// Lines in R^2: direction xi = (cos b, sin b), b_a = 2 pi a / M, offset
// x = s xi_perp with xi_perp = (-sin b, cos b), s_j = (j - N/2) ds,
// ds = 2 L_perp / N.
struct LineGrid {
  int directions = 512;
  int offsets = 512;
  double radius = 8.0;

  double beta(int a) const;
  double step() const { return 2 * radius / offsets; }
  double offset(int j) const { return (j - offsets / 2) * step(); }
  Eigen::Vector2d xi(int a) const;
  Eigen::Vector2d xi_perp(int a) const;
  Eigen::Vector2d point(int a, int j) const;
};

// Values on (direction, offset) nodes; rows are directions. When dual is
// set the columns hold the offset transform at sigma_k = (k - K/2) dsigma.
struct RaySample {
  LineGrid grid;
  int m = 0;
  bool dual = false;
  double dsigma = 0;
  Eigen::MatrixXcd values;

  int count() const { return static_cast<int>(values.cols()); }
  double sigma(int k) const { return (k - count() / 2) * dsigma; }
  // max |phi(s, b + pi) - (-1)^m phi(-s, b)| relative to max |phi|
  double parity_residual() const;
};

RaySample ray_transform(const VolumeField& f, const LineGrid& g);
// pad >= 1 zero-pads the offset axis before transforming.
RaySample fourier_ray(const RaySample& phi, int pad = 1);

RaySample delta_xi(const RaySample& phi);
RaySample delta_xi_power(const RaySample& phi, int r);
// Xi_i phi = (xi_perp)_i d/db phi in the (s, b) chart, i in {0, 1}.
RaySample xi_op(const RaySample& phi, int i);
// Multiplication by xi_i.
RaySample xi_mult(const RaySample& phi, int i);

cplx l2_pairing(const RaySample& a, const RaySample& b);
double xi_adjoint_check(const RaySample& phi1, const RaySample& phi2);

double norm_hst_ts(const RaySample& phi, double s, double t, int pad = 4);
double norm_hrst_ts(const RaySample& phi, int r, double s, double t, int pad = 4);

struct SolenoidalOptions {
  int radial_nodes = 48;
  double radial_max = 10.0;
  int circle_nodes = 256;
  double tangential_tol = 1e-6;
};

double norm_solenoidal(const VolumeField& f, int r, double s, double t,
                       const SolenoidalOptions& opt = {});

struct ReshetnyakReport {
  int m = 0, r = 0;
  double s = 0, t = 0;
  double lhs = 0, rhs = 0, rel_err = 0;
};

ReshetnyakReport reshetnyak_check(const VolumeField& f, int r, double s, double t,
                                  const LineGrid& g, const SolenoidalOptions& opt = {});
ReshetnyakReport reshetnyak_check(const VolumeField& f, const RaySample& phi, int r, double s,
                                  double t, const SolenoidalOptions& opt = {});

struct Band {
  double lo = 0.3;
  double hi = 6.0;
};

// max deviation between fourier_ray(phi) and (2 pi)^(1/2) fhat(sigma xi_perp) xi^m
// over |sigma| in the band, relative to the largest reference value there.
double slice_check(const VolumeField& f, const RaySample& phi, Band band = {});
double slice_check(const FourierEvaluator& fh, const RaySample& phi, Band band = {});

// Iterated delta_xi on phi = If against the polynomial evaluation
// sum_k <(P^(r,k) fhat)(y), xi^(m+2k)> on circles |y| = |sigma|.
double cross_path_check(const FourierEvaluator& fh, const RaySample& phi, int r, Band band = {});

// n = 3: circle quadrature of xi^I over S^2 cut by y_perp vs the closed form.
double sphere_slice_integral_check(const Eigen::Vector3d& y, int mk, int nodes = 2048);

}  // namespace tt
