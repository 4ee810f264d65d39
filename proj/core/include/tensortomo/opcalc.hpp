#pragma once

#include <map>
#include <string>

#include "tensortomo/dimrational.hpp"
#include "tensortomo/ncpoly.hpp"

namespace tt {

inline constexpr int kMaxOrder = 8;  // coefficients grow quickly past this

// P^(r,k)(|y|^2 d^2, j) acting on rank m, for k in [-r, r]; zero entries omitted.
std::map<int, NCPoly> p_polys(int r, int m);

// Buckets by |y|^2 power and strips the radial markers.
std::map<int, NCPoly> radial_split(const NCPoly& p);

DimRational gamma_coef(int m, int k);

// a_p(m,k) of the contraction expansion.
mpq_class a_coef(int p, int m, int k);

// C^(m,k) = sum_p a_p(m,k) i^p j^(p+k), acting on rank m+2k.
NCPoly c_operator(int m, int k);

NCPoly b_operator(int m, int q, int l);
NCPoly a_tilde(int m, int r, int l);
NCPoly a_operator(int m, int r, int l);

// JSON document {m, r, l, terms, checks} for one operator.
std::string derivation_report(int m, int r, int l, const NCPoly& op, bool tilde = false);

}  // namespace tt
