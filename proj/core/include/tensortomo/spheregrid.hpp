#pragma once

#include <Eigen/Dense>
#include <memory>
#include <vector>

#include "tensortomo/symtensor.hpp"

namespace tt {

// Quadrature grid on S^(n-1), n in {2, 3}.
//  n = 2: M uniform angles, node a at theta = 2 pi a / M.
//  n = 3: nt Gauss-Legendre colatitudes times np = 2 nt uniform longitudes,
//         node index j * np + k.
// Derivatives are spectral: trigonometric least-squares differentiation
// along circles (the n = 2 circle, the n = 3 latitude rings and meridian
// great circles).
class SphereGrid {
 public:
  static std::shared_ptr<const SphereGrid> circle(int M);
  static std::shared_ptr<const SphereGrid> sphere(int nt);

  int n() const { return n_; }
  int size() const { return static_cast<int>(w_.size()); }
  double area() const { return area_; }
  const Eigen::MatrixXd& nodes() const { return y_; }  // size() x n
  const Eigen::VectorXd& weights() const { return w_; }
  int rings() const { return nt_; }
  int ring_size() const { return np_; }
  double theta(int j) const { return theta_[j]; }
  double phi(int k) const { return phi_[k]; }

  // Tangential gradient of every column of vals (size() x C): returns n
  // matrices, entry k holding the k-th ambient component.
  std::vector<Eigen::MatrixXcd> grad(const Eigen::MatrixXcd& vals) const;

 private:
  SphereGrid() = default;
  int n_ = 0;
  int nt_ = 0;
  int np_ = 0;
  double area_ = 0;
  Eigen::MatrixXd y_;
  Eigen::VectorXd w_;
  std::vector<double> theta_, phi_;
  Eigen::MatrixXd d_ring_;      // n = 2: the circle; n = 3: one latitude ring
  Eigen::MatrixXd d_meridian_;  // n = 3: a full meridian great circle (2 nt points)
};

using GridPtr = std::shared_ptr<const SphereGrid>;

}  // namespace tt
