#pragma once

#include <Eigen/Dense>
#include <vector>

namespace tt {

struct GaussRule {
  std::vector<double> x;
  std::vector<double> w;
};

// Gauss-Legendre nodes on [-1, 1], ascending.
GaussRule gauss_legendre(int count);

// Same rule mapped to [a, b].
GaussRule gauss_legendre(int count, double a, double b);

// Differentiation matrix for periodic samples at angles t: derivative of the
// least-squares trigonometric fit of degree K (K < count/2).
Eigen::MatrixXd trig_diff_matrix(const std::vector<double>& t, int K);

// Uniform periodic grid of M points with K = M/2 - 1.
Eigen::MatrixXd trig_diff_matrix_uniform(int M);

}  // namespace tt
