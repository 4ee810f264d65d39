#include "tensortomo/fixtures.hpp"

#include "json.hpp"
#include <set>
#include <stdexcept>

#include "tensortomo/opcalc.hpp"

namespace tt {

namespace {

mpq_class F(long k) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(k));
  return mpq_class(r);
}

mpq_class pow2(long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, static_cast<unsigned long>(e < 0 ? -e : e));
  return e < 0 ? mpq_class(1) / mpq_class(r) : mpq_class(r);
}

DimRational Q(const mpq_class& v) {
  mpq_class c = v;
  c.canonicalize();
  return DimRational(c);
}

Word ijd(int p, int q, int nd) {
  Word w;
  w.letters.assign(p, Letter::I);
  w.letters.insert(w.letters.end(), q, Letter::J);
  w.letters.insert(w.letters.end(), nd, Letter::D);
  return w;
}

}  // namespace

NCPoly fixture_a(int m, int r, int l) {
  if (r < 0 || r > 2 || l < 0 || l > r || m < 0) throw std::invalid_argument("fixture_a: need 0 <= l <= r <= 2");
  const DimRational n = DimRational::n();
  NCPoly out(m);
  if (r == 0) {
    for (int k = 0; k <= m / 2; ++k)
      out.add_term(ijd(k, k, 0), gamma_coef(m, 0) * Q(pow2(m) * F(m) * F(m) * F(m) /
                                                     (F(2 * m) * pow2(2 * k) * F(k) * F(k) * F(m - 2 * k))));
    return out;
  }
  if (r == 1 && l == 0) {
    if (m < 2) {
      out.add_term(Word{}, DimRational(1));
      return out;
    }
    for (int p = 0; p <= m / 2; ++p) {
      DimRational bracket = DimRational(2 * p * (m + 1)) * (DimRational(2 * m - 3) + n) +
                            DimRational(m - 1) * (DimRational(m) * (DimRational(m - 3) + n) + DimRational(1));
      out.add_term(ijd(p, p, 0), gamma_coef(m, 0) *
                                     Q(mpq_class(m) * F(m) * F(m) * F(m - 2) / F(2 * m) * pow2(m - 2 * p) /
                                       (F(p) * F(p) * F(m - 2 * p))) *
                                     bracket);
    }
    return out;
  }
  if (r == 1 && l == 1) {
    for (int p = 0; p <= m / 2; ++p)
      out.add_term(ijd(p, p + 1, 2), -gamma_coef(m, 1) * Q(F(m) * F(m + 1) * F(m + 2) / F(2 * m + 2) *
                                                            pow2(m - 2 * p) / (F(p) * F(p + 1) * F(m - 2 * p))));
    return out;
  }
  if (r == 2 && l == 0) {
    if (m == 0) {
      out.add_term(Word{}, DimRational(1));
      return out;
    }
    if (m == 1) {
      out.add_term(Word{}, n - DimRational(1));
      return out;
    }
    const DimRational q = DimRational(m * m - 3 * m + 1) + DimRational(m) * n;
    const DimRational a = DimRational(2 * m - 3) + n;
    const DimRational b = DimRational(2 * m - 5) + n;
    for (int p = 0; p <= m / 2; ++p) {
      DimRational bracket = DimRational(m - 1) * q * q + DimRational(4 * p) * a * q -
                            DimRational(4L * (m + 1) * p * p) * a * b;
      out.add_term(ijd(p, p, 0), gamma_coef(m, 0) *
                                     Q(pow2(m - 2 * p) * mpq_class(m * m) * F(m) * F(m - 1) * F(m - 2) /
                                       (F(m - 2 * p) * F(p) * F(p) * F(2 * m))) *
                                     bracket);
    }
    return out;
  }
  if (r == 2 && l == 1) {
    const DimRational bracket = DimRational(m * m - m - 1) + DimRational(m + 1) * n;
    for (int p = 0; p <= m / 2; ++p)
      out.add_term(ijd(p, p + 1, 2), -gamma_coef(m, 1) * bracket *
                                         Q(pow2(m + 1) * F(m) * F(m + 1) * F(m + 2) / F(2 * m + 2) /
                                           (pow2(2 * p) * F(p) * F(p + 1) * F(m - 2 * p))));
    return out;
  }
  // r == 2, l == 2
  for (int p = 0; p <= m / 2; ++p)
    out.add_term(ijd(p, p + 2, 4), gamma_coef(m, 2) * Q(pow2(m) * F(m) * F(m + 2) * F(m + 4) / F(2 * m + 4) /
                                                         (pow2(2 * p) * F(p) * F(p + 2) * F(m - 2 * p))));
  return out;
}

std::map<int, NCPoly> fixture_p1(int m) {
  std::map<int, NCPoly> out;
  Word j;
  j.letters = {Letter::J};
  Word ydd;
  ydd.letters = {Letter::D, Letter::D};
  ydd.rad = 1;
  out[-1] = NCPoly::monomial(m, j, DimRational(m * (m + 1)));
  out[0] = NCPoly::monomial(m, Word{}, DimRational(m) * (DimRational(m - 3) + DimRational::n()));
  out[1] = NCPoly::monomial(m, ydd, DimRational(-1));
  return out;
}

bool CompareReport::all_match() const {
  for (const auto& e : entries)
    if (!e.match) return false;
  return true;
}

CompareEntry compare_ops(const std::string& name, const NCPoly& pipeline, const NCPoly& fixture) {
  CompareEntry e;
  e.name = name;
  std::set<Word> words;
  for (const auto& [w, c] : pipeline.terms()) words.insert(w);
  for (const auto& [w, c] : fixture.terms()) words.insert(w);
  for (const auto& w : words) {
    DimRational a = pipeline.coeff(w), b = fixture.coeff(w);
    if (a == b) continue;
    e.match = false;
    e.diffs.push_back({w.str(), a.str(), b.str(), (a - b).str()});
  }
  return e;
}

namespace {

std::string op_name(const char* tag, int m, int r, int l) {
  return std::string(tag) + "(" + std::to_string(m) + "," + std::to_string(r) + "," + std::to_string(l) + ")";
}

}  // namespace

CompareReport compare_p1(int m) {
  CompareReport rep;
  rep.m = m;
  rep.r = 1;
  auto pipe = p_polys(1, m);
  auto fix = fixture_p1(m);
  for (int k = -1; k <= 1; ++k) {
    NCPoly a = pipe.count(k) ? pipe.at(k) : NCPoly(m);
    NCPoly b = fix.count(k) ? fix.at(k) : NCPoly(m);
    rep.entries.push_back(compare_ops("P(1," + std::to_string(k) + ")[m=" + std::to_string(m) + "]", a, b));
  }
  return rep;
}

CompareReport reference_compare(int m, int r) {
  if (r < 0 || r > 2) throw std::invalid_argument("reference_compare: r must be 0, 1 or 2");
  CompareReport rep;
  rep.m = m;
  rep.r = r;
  if (r == 0) {
    rep.entries.push_back(compare_ops(op_name("A", m, 0, 0), a_operator(m, 0, 0), fixture_a(m, 0, 0)));
    return rep;
  }
  for (int l = 0; l <= r; ++l)
    rep.entries.push_back(compare_ops(op_name("A~", m, r, l), a_tilde(m, r, l), fixture_a(m, r, l)));
  if (r == 1)
    for (auto& e : compare_p1(m).entries) rep.entries.push_back(e);
  return rep;
}

std::string to_json(const CompareReport& rep) {
  nlohmann::ordered_json j;
  j["m"] = rep.m;
  j["r"] = rep.r;
  j["match"] = rep.all_match();
  auto arr = nlohmann::ordered_json::array();
  for (const auto& e : rep.entries) {
    nlohmann::ordered_json je;
    je["name"] = e.name;
    je["match"] = e.match;
    auto d = nlohmann::ordered_json::array();
    for (const auto& t : e.diffs)
      d.push_back({{"word", t.word}, {"pipeline", t.pipeline}, {"fixture", t.fixture}, {"difference", t.difference}});
    je["diffs"] = d;
    arr.push_back(je);
  }
  j["entries"] = arr;
  return j.dump(2);
}

}  // namespace tt
