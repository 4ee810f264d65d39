#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "tensortomo/dimrational.hpp"

namespace tt {

DimRational::DimRational(const mpq_class& c) : num_(c), den_(1) { canon(); }

DimRational::DimRational(const PolyQ& num, const PolyQ& den) : num_(num), den_(den) {
  if (den.is_zero()) throw std::domain_error("DimRational with zero denominator");
  canon();
}

void DimRational::canon() {
  if (num_.is_zero()) {
    den_ = PolyQ(1);
    return;
  }
  PolyQ g = PolyQ::gcd(num_, den_);
  if (g.degree() > 0) {
    PolyQ q, r;
    PolyQ::divmod(num_, g, q, r);
    num_ = q;
    PolyQ::divmod(den_, g, q, r);
    den_ = q;
  }
  mpq_class sn = num_.primitive_scale();
  mpq_class sd = den_.primitive_scale();
  num_ *= PolyQ(sn);
  den_ *= PolyQ(sd);
  mpq_class c = sd / sn;
  c.canonicalize();
  mpz_class p = c.get_num(), q = c.get_den();
  num_ *= PolyQ(mpq_class(p));
  den_ *= PolyQ(mpq_class(q));
}

bool DimRational::is_one() const { return num_ == PolyQ(1) && den_ == PolyQ(1); }

mpq_class DimRational::constant_value() const {
  if (!is_constant()) throw std::logic_error("DimRational is not constant");
  return num_.coef(0) / den_.coef(0);
}

DimRational DimRational::operator-() const {
  DimRational r = *this;
  r.num_ = -r.num_;
  return r;
}

DimRational& DimRational::operator+=(const DimRational& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
  }
  canon();
  return *this;
}

DimRational& DimRational::operator-=(const DimRational& o) { return *this += -o; }

DimRational& DimRational::operator*=(const DimRational& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  canon();
  return *this;
}

DimRational& DimRational::operator/=(const DimRational& o) {
  if (o.is_zero()) throw std::domain_error("DimRational division by zero");
  num_ *= o.den_;
  den_ *= o.num_;
  canon();
  return *this;
}

mpq_class DimRational::eval(long n0) const {
  mpq_class x(n0);
  mpq_class d = den_.eval(x);
  if (d == 0) throw std::domain_error("coefficient has a pole at n = " + std::to_string(n0));
  mpq_class r = num_.eval(x) / d;
  r.canonicalize();
  return r;
}

double DimRational::eval_double(double n0) const { return num_.eval(n0) / den_.eval(n0); }

int DimRational::sign() const { return num_.is_zero() ? 0 : (num_.lead() > 0 ? 1 : -1); }

namespace {

struct Factored {
  mpz_class content;                            // signed
  std::vector<std::pair<mpz_class, mpz_class>> linear;  // (b, c): b n + c, b > 0
  PolyQ rest;                                   // primitive, positive lead, or constant 1
};

std::vector<mpz_class> divisors(mpz_class v) {
  v = abs(v);
  std::vector<mpz_class> d;
  if (v == 0) return d;
  if (v > 100000) {
    d.push_back(1);
    return d;
  }
  for (mpz_class k = 1; k <= v; ++k)
    if (v % k == 0) d.push_back(k);
  return d;
}

Factored factor_int(const PolyQ& p) {
  Factored f;
  mpq_class s = p.primitive_scale();  // p * s is primitive with positive lead
  mpq_class c = 1 / s;
  c.canonicalize();
  f.content = c.get_num();  // p has integer coefficients here, so c is an integer
  PolyQ rest = p * PolyQ(s);
  while (rest.degree() >= 1) {
    // a rational root a/b with a | c0 and b | lead
    mpz_class c0 = rest.coef(0).get_num();
    if (c0 == 0) {
      f.linear.emplace_back(1, 0);
      PolyQ q, r;
      PolyQ::divmod(rest, PolyQ::var(), q, r);
      rest = q;
      continue;
    }
    bool found = false;
    for (const auto& b : divisors(rest.lead().get_num())) {
      for (const auto& a : divisors(c0)) {
        for (int sg : {1, -1}) {
          mpq_class root(sg * a, b);
          root.canonicalize();
          if (root.get_den() != b) continue;
          if (rest.eval(root) != 0) continue;
          // factor (b n - a')
          PolyQ lin;
          lin = PolyQ(mpq_class(-root.get_num())) + PolyQ(mpq_class(root.get_den())) * PolyQ::var();
          PolyQ q, r;
          PolyQ::divmod(rest, lin, q, r);
          rest = q * PolyQ(q.primitive_scale());
          f.linear.emplace_back(root.get_den(), -root.get_num());
          found = true;
          break;
        }
        if (found) break;
      }
      if (found) break;
    }
    if (!found) break;
  }
  if (rest.is_constant()) {
    // absorb any leftover constant into the content
    mpq_class v = rest.coef(0);
    if (v != 1) {
      mpq_class cc = mpq_class(f.content) * v;
      f.content = cc.get_num();
    }
    f.rest = PolyQ(1);
  } else {
    f.rest = rest;
  }
  std::sort(f.linear.begin(), f.linear.end(), [](const auto& x, const auto& y) {
    // ascending constant term over leading coefficient
    return mpq_class(x.second, x.first) < mpq_class(y.second, y.first);
  });
  return f;
}

std::string linear_str(const mpz_class& b, const mpz_class& c) {
  std::ostringstream os;
  if (b != 1) os << b;
  os << "n";
  if (c > 0) os << "+" << c;
  if (c < 0) os << "-" << abs(c);
  return os.str();
}

// Number of multiplicative factors in the rendering (for parenthesization).
int factor_count(const Factored& f) {
  int k = static_cast<int>(f.linear.size()) + (f.rest.degree() >= 1 ? 1 : 0);
  if (abs(f.content) != 1) ++k;
  return k;
}

std::string render(const Factored& f) {
  std::ostringstream os;
  const int nonconst = static_cast<int>(f.linear.size()) + (f.rest.degree() >= 1 ? 1 : 0);
  if (nonconst == 0) {
    os << f.content;
    return os.str();
  }
  if (f.content == -1) os << "-";
  if (abs(f.content) != 1) os << f.content;
  // group repeated linear factors
  std::vector<std::pair<std::string, int>> parts;
  for (const auto& [b, c] : f.linear) {
    std::string t = linear_str(b, c);
    if (!parts.empty() && parts.back().first == t)
      ++parts.back().second;
    else
      parts.emplace_back(t, 1);
  }
  const bool wrap = nonconst > 1 || f.content != 1;
  for (const auto& [t, e] : parts) {
    const bool bare = t == "n" || (!wrap && e == 1);
    os << (bare ? t : "(" + t + ")");
    if (e > 1) os << "^" << e;
  }
  if (f.rest.degree() >= 1) {
    if (wrap)
      os << "(" << f.rest.str() << ")";
    else
      os << f.rest.str();
  }
  return os.str();
}

}  // namespace

std::string factored_str(const PolyQ& p) {
  if (p.is_zero()) return "0";
  return render(factor_int(p));
}

std::string DimRational::num_str() const { return factored_str(num_); }

std::string DimRational::den_str() const { return factored_str(den_); }

std::string DimRational::str() const {
  if (num_.is_zero()) return "0";
  std::string ns = factored_str(num_);
  if (den_ == PolyQ(1)) return ns;
  Factored fd = factor_int(den_);
  std::string ds = render(fd);
  if (den_.degree() >= 1 || factor_count(fd) > 1) ds = "(" + ds + ")";
  Factored fn = factor_int(num_);
  const bool single = fn.content == 1 && ((fn.linear.size() == 1 && fn.linear[0].second != 0 && fn.rest.degree() < 1) ||
                                          (fn.linear.empty() && fn.rest.degree() >= 1));
  if (single) ns = "(" + ns + ")";
  return ns + "/" + ds;
}

// ---- parsing -------------------------------------------------------------

namespace {

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  DimRational parse_all() {
    DimRational v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("coefficient parse error at position " + std::to_string(pos_) + ": " + what +
                                " in '" + s_ + "'");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  bool starts_primary() {
    skip();
    if (pos_ >= s_.size()) return false;
    char c = s_[pos_];
    return c == '(' || c == 'n' || std::isdigit(static_cast<unsigned char>(c));
  }
  DimRational expr() {
    DimRational v = term();
    while (true) {
      if (peek('+')) {
        ++pos_;
        v += term();
      } else if (peek('-')) {
        ++pos_;
        v -= term();
      } else {
        return v;
      }
    }
  }
  DimRational term() {
    DimRational v = unary();
    while (true) {
      if (peek('*')) {
        ++pos_;
        v *= unary();
      } else if (peek('/')) {
        ++pos_;
        v /= unary();
      } else if (starts_primary()) {
        v *= power();
      } else {
        return v;
      }
    }
  }
  DimRational unary() {
    if (peek('-')) {
      ++pos_;
      return -unary();
    }
    if (peek('+')) {
      ++pos_;
      return unary();
    }
    return power();
  }
  DimRational power() {
    DimRational b = primary();
    if (peek('^')) {
      ++pos_;
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      int e = std::stoi(s_.substr(start, pos_ - start));
      DimRational r(1);
      for (int i = 0; i < e; ++i) r *= b;
      return r;
    }
    return b;
  }
  DimRational primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      DimRational v = expr();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return v;
    }
    if (c == 'n') {
      ++pos_;
      return DimRational::n();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return DimRational(mpq_class(mpz_class(s_.substr(start, pos_ - start))));
    }
    fail("unexpected character");
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

DimRational DimRational::parse(const std::string& text) { return Parser(text).parse_all(); }

}  // namespace tt
