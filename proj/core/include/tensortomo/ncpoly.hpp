#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tensortomo/dimrational.hpp"

namespace tt {

enum class Letter : std::uint8_t { I = 0, J = 1, D = 2, DELTA = 3 };

int rank_step(Letter l);

struct Word {
  std::vector<Letter> letters;  // leftmost letter is applied last
  int rad = 0;                  // power of |y|^2

  int order() const;  // number of D and DELTA letters
  // Output rank starting from base rank m, or nullopt if some intermediate
  // rank would be negative.
  std::optional<int> out_rank(int m) const;

  bool operator<(const Word& o) const;
  bool operator==(const Word& o) const { return rad == o.rad && letters == o.letters; }

  std::string str() const;
  static Word parse(const std::string& text);
};

Word operator*(const Word& a, const Word& b);

class StructuralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NCPoly {
 public:
  NCPoly() = default;
  explicit NCPoly(int base_rank) : base_(base_rank) {}
  static NCPoly identity(int base_rank);
  static NCPoly monomial(int base_rank, Word w, DimRational c = DimRational(1));

  int base_rank() const { return base_; }
  const std::map<Word, DimRational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  DimRational coeff(const Word& w) const;

  // Adds c*w; words with inadmissible rank flow are dropped.
  void add_term(const Word& w, const DimRational& c);

  NCPoly& operator+=(const NCPoly& o);
  NCPoly& operator-=(const NCPoly& o);
  NCPoly& operator*=(const DimRational& c);
  friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
  friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
  friend NCPoly operator*(const DimRational& c, NCPoly a) { return a *= c; }
  bool operator==(const NCPoly& o) const { return base_ == o.base_ && terms_ == o.terms_; }
  bool operator!=(const NCPoly& o) const { return !(*this == o); }

  // Common output rank, nullopt for the zero polynomial.
  std::optional<int> out_rank() const;

  std::string str() const;
  static NCPoly parse(const std::string& text, int base_rank);

 private:
  int base_ = 0;
  std::map<Word, DimRational> terms_;
};

// a*b: b is applied first. The result has b's base rank.
NCPoly mul(const NCPoly& a, const NCPoly& b);

NCPoly adjoint(const NCPoly& p);

// Every coefficient evaluated at n = n0 (throws std::domain_error on a pole).
NCPoly specialize(const NCPoly& p, long n0);

struct RankFlowReport {
  int base_rank = 0;
  int out_rank = 0;
  int max_order = 0;
  int min_order = 0;
};

// Throws StructuralError naming the offending word when a word does not map
// base rank to expected_out (default: base rank) or, if expected_order >= 0,
// does not contain exactly that many derivative letters.
RankFlowReport rank_flow_check(const NCPoly& p, std::optional<int> expected_out = std::nullopt,
                               int expected_order = -1);

}  // namespace tt
