#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace tt {

// Univariate polynomial in the dimension symbol n with rational coefficients,
// low degree first, no trailing zeros.
class PolyQ {
 public:
  PolyQ() = default;
  PolyQ(const mpq_class& c);  // NOLINT: implicit constant
  PolyQ(long c) : PolyQ(mpq_class(c)) {}  // NOLINT
  static PolyQ var();                    // n
  static PolyQ linear(long a, long b);   // a*n + b

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const mpq_class& coef(int i) const;
  mpq_class lead() const { return c_.empty() ? mpq_class(0) : c_.back(); }
  const std::vector<mpq_class>& coeffs() const { return c_; }

  PolyQ operator-() const;
  PolyQ& operator+=(const PolyQ& o);
  PolyQ& operator-=(const PolyQ& o);
  PolyQ& operator*=(const PolyQ& o);
  friend PolyQ operator+(PolyQ a, const PolyQ& b) { return a += b; }
  friend PolyQ operator-(PolyQ a, const PolyQ& b) { return a -= b; }
  friend PolyQ operator*(PolyQ a, const PolyQ& b) { return a *= b; }
  bool operator==(const PolyQ& o) const { return c_ == o.c_; }

  static void divmod(const PolyQ& a, const PolyQ& b, PolyQ& q, PolyQ& r);
  static PolyQ gcd(PolyQ a, PolyQ b);  // monic
  PolyQ monic() const;
  // Scale to integer coefficients with unit content and positive leading
  // coefficient; returns the factor that was applied.
  mpq_class primitive_scale() const;

  mpq_class eval(const mpq_class& x) const;
  double eval(double x) const;

  // Plain expanded text such as "2n^2-3n+1".
  std::string str() const;

 private:
  void trim();
  std::vector<mpq_class> c_;
};

// Element of Q(n) in canonical form: num/den coprime, integer coefficients,
// den with positive leading coefficient, and no common integer content.
class DimRational {
 public:
  DimRational() : num_(0), den_(1) {}
  DimRational(long c) : num_(c), den_(1) {}  // NOLINT
  DimRational(const mpq_class& c);           // NOLINT
  DimRational(const PolyQ& num, const PolyQ& den);
  static DimRational n() { return DimRational(PolyQ::var(), PolyQ(1)); }

  const PolyQ& num() const { return num_; }
  const PolyQ& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  bool is_one() const;
  mpq_class constant_value() const;

  DimRational operator-() const;
  DimRational& operator+=(const DimRational& o);
  DimRational& operator-=(const DimRational& o);
  DimRational& operator*=(const DimRational& o);
  DimRational& operator/=(const DimRational& o);
  friend DimRational operator+(DimRational a, const DimRational& b) { return a += b; }
  friend DimRational operator-(DimRational a, const DimRational& b) { return a -= b; }
  friend DimRational operator*(DimRational a, const DimRational& b) { return a *= b; }
  friend DimRational operator/(DimRational a, const DimRational& b) { return a /= b; }
  bool operator==(const DimRational& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const DimRational& o) const { return !(*this == o); }

  // Exact value at an integer dimension; throws on a pole.
  mpq_class eval(long n0) const;
  double eval_double(double n0) const;
  // Sign of the leading coefficient of the numerator (-1, 0, 1).
  int sign() const;

  // Human readable factored text: "1/(n-1)", "2(2n-1)/((n-1)(n+1))", "n-1".
  std::string str() const;
  std::string num_str() const;
  std::string den_str() const;

  static DimRational parse(const std::string& text);

 private:
  void canon();
  PolyQ num_;
  PolyQ den_;
};

// Factored rendering of an integer polynomial: content times linear factors
// (with integer or rational roots) times a remaining primitive factor.
std::string factored_str(const PolyQ& p);

}  // namespace tt
