#include <sstream>
#include <stdexcept>

#include "tensortomo/dimrational.hpp"

namespace tt {

PolyQ::PolyQ(const mpq_class& c) {
  mpq_class v = c;
  v.canonicalize();
  if (v != 0) c_.push_back(v);
}

PolyQ PolyQ::var() {
  PolyQ p;
  p.c_ = {mpq_class(0), mpq_class(1)};
  return p;
}

PolyQ PolyQ::linear(long a, long b) {
  PolyQ p;
  p.c_ = {mpq_class(b), mpq_class(a)};
  p.trim();
  return p;
}

const mpq_class& PolyQ::coef(int i) const {
  static const mpq_class zero(0);
  if (i < 0 || i >= static_cast<int>(c_.size())) return zero;
  return c_[i];
}

void PolyQ::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

PolyQ PolyQ::operator-() const {
  PolyQ r = *this;
  for (auto& v : r.c_) v = -v;
  return r;
}

PolyQ& PolyQ::operator+=(const PolyQ& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), mpq_class(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

PolyQ& PolyQ::operator-=(const PolyQ& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), mpq_class(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

PolyQ& PolyQ::operator*=(const PolyQ& o) {
  if (c_.empty() || o.c_.empty()) {
    c_.clear();
    return *this;
  }
  std::vector<mpq_class> r(c_.size() + o.c_.size() - 1, mpq_class(0));
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  c_ = std::move(r);
  trim();
  return *this;
}

void PolyQ::divmod(const PolyQ& a, const PolyQ& b, PolyQ& q, PolyQ& r) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  q = PolyQ();
  r = a;
  const int db = b.degree();
  if (a.degree() < db) return;
  q.c_.assign(a.degree() - db + 1, mpq_class(0));
  while (!r.is_zero() && r.degree() >= db) {
    const int shift = r.degree() - db;
    mpq_class f = r.lead() / b.lead();
    q.c_[shift] = f;
    for (int i = 0; i <= db; ++i) r.c_[i + shift] -= f * b.c_[i];
    r.trim();
  }
  q.trim();
}

PolyQ PolyQ::monic() const {
  if (is_zero()) return *this;
  PolyQ r = *this;
  mpq_class l = lead();
  for (auto& v : r.c_) v /= l;
  return r;
}

PolyQ PolyQ::gcd(PolyQ a, PolyQ b) {
  while (!b.is_zero()) {
    PolyQ q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

mpq_class PolyQ::primitive_scale() const {
  if (is_zero()) return mpq_class(1);
  mpz_class den_lcm = 1;
  for (const auto& v : c_) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), v.get_den_mpz_t());
  mpz_class content = 0;
  for (const auto& v : c_) {
    mpz_class iv = v.get_num() * (den_lcm / v.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), iv.get_mpz_t());
  }
  mpq_class s(den_lcm, content);
  s.canonicalize();
  if (lead() < 0) s = -s;
  return s;
}

mpq_class PolyQ::eval(const mpq_class& x) const {
  mpq_class r = 0;
  for (int i = degree(); i >= 0; --i) r = r * x + c_[i];
  return r;
}

double PolyQ::eval(double x) const {
  double r = 0;
  for (int i = degree(); i >= 0; --i) r = r * x + c_[i].get_d();
  return r;
}

std::string PolyQ::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const mpq_class& v = c_[i];
    if (v == 0) continue;
    mpq_class a = abs(v);
    if (v < 0)
      os << "-";
    else if (!first)
      os << "+";
    const bool unit = (a == 1);
    if (i == 0 || !unit) {
      if (a.get_den() == 1)
        os << a.get_num();
      else
        os << a.get_num() << "/" << a.get_den();
    }
    if (i >= 1) os << "n";
    if (i >= 2) os << "^" << i;
    first = false;
  }
  return os.str();
}

}  // namespace tt
