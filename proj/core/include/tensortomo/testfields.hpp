#pragma once

#include <Eigen/Dense>
#include <map>
#include <random>
#include <vector>

#include "tensortomo/symtensor.hpp"

namespace tt {

// exp(-|x|^2/2) * q(x), q a polynomial with complex coefficients.
struct GaussPoly {
  int n = 2;
  std::map<std::vector<int>, cplx> coef;  // exponent vector -> coefficient

  static GaussPoly gaussian(int n, cplx c = 1.0);
  cplx eval(const double* x) const;
  GaussPoly derivative(int k) const;
  // Multiplication by x_k.
  GaussPoly times_x(int k) const;
  // Fourier transform under the symmetric convention; again of this form.
  GaussPoly fourier() const;
  GaussPoly& operator+=(const GaussPoly& o);
  GaussPoly& operator*=(cplx c);
};

// Symmetric field with one GaussPoly per sorted component.
struct TestField {
  int n = 2;
  int m = 0;
  std::vector<GaussPoly> comps;

  SymTensor at(const double* x) const;
  TestField fourier() const;
};

// w times a random polynomial of the given degree, seeded.
GaussPoly random_gauss_poly(int n, int degree, std::mt19937_64& rng);

// n = 2 only: f = (d_perp)^m w with d_perp = (-d_2, d_1); solenoidal.
TestField curl_field(int m, const GaussPoly& w);
// Rank m field whose components are independent random GaussPolys.
TestField random_field(int n, int m, int degree, std::mt19937_64& rng);
// Symmetrized gradient of v, rank 1 for scalar v.
TestField gradient_field(const GaussPoly& v);

}  // namespace tt
