#pragma once

#include <Eigen/Dense>
#include <functional>
#include <iosfwd>
#include <map>

#include "tensortomo/ncpoly.hpp"
#include "tensortomo/spheregrid.hpp"
#include "tensortomo/symtensor.hpp"

namespace tt {

// Symmetric rank-m field on a sphere grid; row = node, column = sorted
// multi-index position.
struct TangentField {
  GridPtr grid;
  int m = 0;
  Eigen::MatrixXcd values;

  TangentField() = default;
  TangentField(GridPtr g, int rank);
  int n() const { return grid->n(); }
  SymTensor at(int node) const;
  void set(int node, const SymTensor& t);
  TangentField& operator+=(const TangentField& o);
  TangentField& operator-=(const TangentField& o);
  TangentField& operator*=(cplx c);
  double max_abs() const;
  // Largest |y . f| over nodes and slots, relative to max_abs().
  double normal_residual() const;
};

TangentField operator+(TangentField a, const TangentField& b);
TangentField operator-(TangentField a, const TangentField& b);
TangentField operator*(cplx c, TangentField a);

// Non-symmetric tensor field in full storage, used for covariant derivatives.
struct FullField {
  GridPtr grid;
  int rank = 0;
  Eigen::MatrixXcd values;  // nodes x n^rank, first axis slowest
};

// Samples an ambient rank-m field given per node by f(y).
TangentField sample(GridPtr g, int m, const std::function<SymTensor(const Eigen::VectorXd&)>& f);

TangentField tangential_project(const TangentField& f);

FullField nabla(const FullField& f);
FullField nabla(const TangentField& f);
FullField nabla2(const TangentField& f);
FullField to_full(const TangentField& f);

TangentField inner_d(const TangentField& f);
TangentField divergence(const TangentField& f);
TangentField metric_i(const TangentField& f);
TangentField trace_j(const TangentField& f);

// Evaluates the operator on f with coefficients taken at n = grid n. On a
// sphere of the given radius each word picks up radius^(2 rad - order).
TangentField apply_ncpoly(const NCPoly& p, const TangentField& f, double radius = 1.0);

cplx sphere_integrate(GridPtr g, const Eigen::VectorXcd& vals);
cplx sphere_inner(const TangentField& u, const TangentField& v);

struct JD2Identities {
  double jd2;     // j d^2 = 1/3 d delta + 1/2 delta d + 1/6 d^2 j
  double j2d2;    // j^2 d^2 = 2/3 delta^2 + 1/3 Delta j
  double d2form;  // the two forms of D^(2)
  double scale;   // max |f| used for relative reporting
};

JD2Identities jd2_identity_check(const TangentField& f);

// Columnar dump: node coordinates, weight, then re/im of each component.
void write_columnar(std::ostream& os, const TangentField& f);

}  // namespace tt
