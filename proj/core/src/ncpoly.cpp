#include "tensortomo/ncpoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace tt {

namespace {

const char* kDelta = "\xce\xb4";  // δ

const char* letter_text(Letter l) {
  switch (l) {
    case Letter::I:
      return "i";
    case Letter::J:
      return "j";
    case Letter::D:
      return "d";
    case Letter::DELTA:
      return kDelta;
  }
  return "?";
}

[[noreturn]] void parse_fail(const std::string& text, std::size_t pos, const std::string& what) {
  throw std::invalid_argument("operator parse error at position " + std::to_string(pos) + ": " + what + " in '" +
                              text + "'");
}

}  // namespace

int rank_step(Letter l) {
  switch (l) {
    case Letter::I:
      return 2;
    case Letter::J:
      return -2;
    case Letter::D:
      return 1;
    case Letter::DELTA:
      return -1;
  }
  return 0;
}

int Word::order() const {
  return static_cast<int>(
      std::count_if(letters.begin(), letters.end(), [](Letter l) { return l == Letter::D || l == Letter::DELTA; }));
}

std::optional<int> Word::out_rank(int m) const {
  int r = m;
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    r += rank_step(*it);
    if (r < 0) return std::nullopt;
  }
  return r;
}

bool Word::operator<(const Word& o) const {
  if (letters != o.letters) return letters < o.letters;
  return rad < o.rad;
}

Word operator*(const Word& a, const Word& b) {
  Word w;
  w.letters = a.letters;
  w.letters.insert(w.letters.end(), b.letters.begin(), b.letters.end());
  w.rad = a.rad + b.rad;
  return w;
}

std::string Word::str() const {
  std::ostringstream os;
  bool first = true;
  if (rad > 0) {
    os << "|y|^" << 2 * rad;
    first = false;
  }
  std::size_t i = 0;
  while (i < letters.size()) {
    std::size_t j = i;
    while (j < letters.size() && letters[j] == letters[i]) ++j;
    if (!first) os << " ";
    os << letter_text(letters[i]);
    if (j - i > 1) os << "^" << (j - i);
    first = false;
    i = j;
  }
  if (first) return "1";
  return os.str();
}

namespace {

// Parses a word starting at pos; stops at the first character that cannot
// start a factor. Returns false if nothing was consumed.
bool parse_word_at(const std::string& s, std::size_t& pos, Word& w) {
  bool any = false;
  auto skip = [&] {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  };
  auto exponent = [&]() -> int {
    skip();
    if (pos < s.size() && s[pos] == '^') {
      ++pos;
      skip();
      std::size_t st = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      if (st == pos) parse_fail(s, pos, "expected exponent");
      return std::stoi(s.substr(st, pos - st));
    }
    return 1;
  };
  while (true) {
    skip();
    if (pos >= s.size()) break;
    std::size_t save = pos;
    std::optional<Letter> l;
    bool radial = false;
    if (s.compare(pos, 5, "delta") == 0) {
      l = Letter::DELTA;
      pos += 5;
    } else if (s.compare(pos, 2, kDelta) == 0) {
      l = Letter::DELTA;
      pos += 2;
    } else if (s.compare(pos, 3, "|y|") == 0) {
      radial = true;
      pos += 3;
    } else if (s[pos] == 'i') {
      l = Letter::I;
      ++pos;
    } else if (s[pos] == 'j') {
      l = Letter::J;
      ++pos;
    } else if (s[pos] == 'd') {
      l = Letter::D;
      ++pos;
    } else if (s[pos] == '1' && !any) {
      // the empty word
      ++pos;
      std::size_t p2 = pos;
      while (p2 < s.size() && std::isspace(static_cast<unsigned char>(s[p2]))) ++p2;
      if (p2 < s.size() && std::isdigit(static_cast<unsigned char>(s[p2]))) {
        pos = save;
        break;
      }
      return true;
    } else {
      break;
    }
    // letters must not run into identifiers
    if (pos < s.size() && std::isalpha(static_cast<unsigned char>(s[pos])) && !radial) {
      pos = save;
      parse_fail(s, pos, "unknown operator letter");
    }
    int e = exponent();
    if (radial) {
      if (e % 2 != 0) parse_fail(s, pos, "odd power of |y|");
      w.rad += e / 2;
    } else {
      for (int k = 0; k < e; ++k) w.letters.push_back(*l);
    }
    any = true;
  }
  return any;
}

}  // namespace

Word Word::parse(const std::string& text) {
  Word w;
  std::size_t pos = 0;
  if (!parse_word_at(text, pos, w)) parse_fail(text, pos, "expected a word");
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos != text.size()) parse_fail(text, pos, "trailing characters");
  return w;
}

NCPoly NCPoly::identity(int base_rank) { return monomial(base_rank, Word{}); }

NCPoly NCPoly::monomial(int base_rank, Word w, DimRational c) {
  NCPoly p(base_rank);
  p.add_term(w, c);
  return p;
}

DimRational NCPoly::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? DimRational(0) : it->second;
}

void NCPoly::add_term(const Word& w, const DimRational& c) {
  if (c.is_zero()) return;
  if (!w.out_rank(base_)) return;
  auto [it, inserted] = terms_.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero() && base_ != o.base_) base_ = o.base_;
  if (base_ != o.base_) throw StructuralError("adding operators with different base ranks");
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
  NCPoly neg = o;
  neg *= DimRational(-1);
  return *this += neg;
}

NCPoly& NCPoly::operator*=(const DimRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, v] : terms_) v *= c;
  return *this;
}

std::optional<int> NCPoly::out_rank() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first.out_rank(base_);
}

std::string NCPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    const bool neg = c.sign() < 0;
    DimRational a = neg ? -c : c;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    std::string ws = w.str();
    if (a.is_one()) {
      os << ws;
      continue;
    }
    std::string cs = a.str();
    bool integer = a.is_constant() && a.constant_value().get_den() == 1;
    if (!integer) cs = "(" + cs + ")";
    if (ws == "1" && integer)
      os << cs;
    else
      os << cs << " * " << ws;
  }
  return os.str();
}

NCPoly NCPoly::parse(const std::string& s, int base_rank) {
  NCPoly p(base_rank);
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  };
  skip();
  if (s.substr(pos) == "0") return p;
  bool first = true;
  while (true) {
    skip();
    if (pos >= s.size()) {
      if (first) parse_fail(s, pos, "empty operator");
      break;
    }
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
      skip();
    } else if (!first) {
      parse_fail(s, pos, "expected '+' or '-'");
    }
    first = false;
    DimRational coef(1);
    bool have_coef = false;
    if (pos < s.size() && s[pos] == '(') {
      int depth = 0;
      std::size_t st = pos;
      for (; pos < s.size(); ++pos) {
        if (s[pos] == '(') ++depth;
        if (s[pos] == ')' && --depth == 0) break;
      }
      if (pos >= s.size()) parse_fail(s, st, "unbalanced parenthesis");
      ++pos;
      coef = DimRational::parse(s.substr(st, pos - st));
      have_coef = true;
    } else if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      std::size_t st = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      const std::string num = s.substr(st, pos - st);
      coef = DimRational(mpq_class(mpz_class(num)));
      have_coef = true;
    }
    skip();
    Word w;
    if (have_coef && pos < s.size() && s[pos] == '*') {
      ++pos;
      skip();
      if (!parse_word_at(s, pos, w)) parse_fail(s, pos, "expected a word after '*'");
    } else {
      parse_word_at(s, pos, w);  // implicit product or a bare coefficient
    }
    coef *= DimRational(sign);
    if (!w.out_rank(base_rank)) throw StructuralError("word '" + w.str() + "' has inadmissible rank flow");
    p.add_term(w, coef);
  }
  return p;
}

NCPoly mul(const NCPoly& a, const NCPoly& b) {
  NCPoly out(b.base_rank());
  for (const auto& [wb, cb] : b.terms()) {
    auto mid = wb.out_rank(b.base_rank());
    if (!mid) continue;
    for (const auto& [wa, ca] : a.terms()) out.add_term(wa * wb, ca * cb);
  }
  return out;
}

NCPoly adjoint(const NCPoly& p) {
  NCPoly out(p.out_rank().value_or(p.base_rank()));
  for (const auto& [w, c] : p.terms()) {
    Word a;
    a.rad = w.rad;
    int sign = 1;
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
      switch (*it) {
        case Letter::I:
          a.letters.push_back(Letter::J);
          break;
        case Letter::J:
          a.letters.push_back(Letter::I);
          break;
        case Letter::D:
          a.letters.push_back(Letter::DELTA);
          sign = -sign;
          break;
        case Letter::DELTA:
          a.letters.push_back(Letter::D);
          sign = -sign;
          break;
      }
    }
    out.add_term(a, sign > 0 ? c : -c);
  }
  return out;
}

NCPoly specialize(const NCPoly& p, long n0) {
  NCPoly out(p.base_rank());
  for (const auto& [w, c] : p.terms()) out.add_term(w, DimRational(c.eval(n0)));
  return out;
}

RankFlowReport rank_flow_check(const NCPoly& p, std::optional<int> expected_out, int expected_order) {
  RankFlowReport rep;
  rep.base_rank = p.base_rank();
  const int want = expected_out.value_or(p.base_rank());
  rep.out_rank = want;
  bool first = true;
  for (const auto& [w, c] : p.terms()) {
    auto r = w.out_rank(p.base_rank());
    if (!r) throw StructuralError("word '" + w.str() + "' drives the rank negative");
    if (*r != want)
      throw StructuralError("word '" + w.str() + "' maps rank " + std::to_string(p.base_rank()) + " to " +
                            std::to_string(*r) + ", expected " + std::to_string(want));
    const int o = w.order();
    if (expected_order >= 0 && o != expected_order)
      throw StructuralError("word '" + w.str() + "' has order " + std::to_string(o) + ", expected " +
                            std::to_string(expected_order));
    rep.max_order = first ? o : std::max(rep.max_order, o);
    rep.min_order = first ? o : std::min(rep.min_order, o);
    first = false;
  }
  return rep;
}

}  // namespace tt
