#include "tensortomo/opcalc.hpp"

#include <mutex>
#include "json.hpp"
#include <stdexcept>

namespace tt {

namespace {

mpz_class fact(long k) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(k));
  return r;
}

mpz_class binom(long a, long b) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
  return r;
}

Word dd_rad() {
  Word w;
  w.letters = {Letter::D, Letter::D};
  w.rad = 1;
  return w;
}

Word jw() {
  Word w;
  w.letters = {Letter::J};
  return w;
}

}  // namespace

std::map<int, NCPoly> p_polys(int r, int m) {
  if (r < 0 || m < 0) throw std::invalid_argument("p_polys needs r >= 0 and m >= 0");
  if (r > kMaxOrder) throw std::invalid_argument("p_polys: r exceeds the depth cap " + std::to_string(kMaxOrder));
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::map<int, NCPoly>> cache;
  {
    std::lock_guard<std::mutex> lk(mu);
    auto it = cache.find({r, m});
    if (it != cache.end()) return it->second;
  }
  std::map<int, NCPoly> cur;
  cur[0] = NCPoly::identity(m);
  const NCPoly ydd = NCPoly::monomial(m + 0, dd_rad(), DimRational(-1));
  const DimRational nn = DimRational::n();
  for (int rr = 0; rr < r; ++rr) {
    std::map<int, NCPoly> next;
    for (int k = -rr - 1; k <= rr + 1; ++k) {
      NCPoly acc(m);
      if (auto it = cur.find(k - 1); it != cur.end()) acc += mul(ydd, it->second);
      if (auto it = cur.find(k); it != cur.end()) {
        DimRational c = DimRational(m + 2 * k) * (DimRational(m + 2 * k - 3) + nn);
        acc += c * it->second;
      }
      if (auto it = cur.find(k + 1); it != cur.end()) {
        DimRational c(-static_cast<long>(m + 2 * k + 2) * (m + 2 * k + 1));
        acc += mul(NCPoly::monomial(m + 2 * k + 2, jw(), c), it->second);
      }
      if (!acc.is_zero()) next[k] = acc;
    }
    cur = std::move(next);
  }
  std::lock_guard<std::mutex> lk(mu);
  cache[{r, m}] = cur;
  return cur;
}

std::map<int, NCPoly> radial_split(const NCPoly& p) {
  std::map<int, NCPoly> out;
  for (const auto& [w, c] : p.terms()) {
    int nd = 0;
    for (Letter l : w.letters)
      if (l == Letter::D) ++nd;
    if (nd != 2 * w.rad)
      throw std::logic_error("radial_split: word '" + w.str() + "' has " + std::to_string(w.rad) +
                             " radial factors but " + std::to_string(nd) + " derivatives");
    Word s = w;
    s.rad = 0;
    auto [it, ins] = out.try_emplace(w.rad, NCPoly(p.base_rank()));
    it->second.add_term(s, c);
  }
  for (auto it = out.begin(); it != out.end();) {
    if (it->second.is_zero())
      it = out.erase(it);
    else
      ++it;
  }
  return out;
}

DimRational gamma_coef(int m, int k) {
  const int mk = m + k;
  if (mk < 0) throw std::invalid_argument("gamma_coef needs m + k >= 0");
  mpz_class four_pow;
  mpz_ui_pow_ui(four_pow.get_mpz_t(), 4, static_cast<unsigned long>(mk));
  mpq_class lead(fact(2 * mk), four_pow * fact(mk));
  lead.canonicalize();
  DimRational v(lead);
  // 1/((n-1)/2 + t) = 2/(n-1+2t)
  for (int t = 0; t < mk; ++t) v *= DimRational(PolyQ(2), PolyQ::linear(1, 2 * t - 1));
  return v;
}

mpq_class a_coef(int p, int m, int k) {
  mpz_class two_pow;
  mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, static_cast<unsigned long>(m - 2 * p));
  mpq_class v(two_pow * fact(m) * fact(m + k) * fact(m + 2 * k),
              fact(m - 2 * p) * fact(p) * fact(p + k) * fact(2 * m + 2 * k));
  v.canonicalize();
  return v;
}

NCPoly c_operator(int m, int k) {
  if (m < 0 || m + 2 * k < 0) throw std::invalid_argument("c_operator needs m >= 0 and m + 2k >= 0");
  NCPoly out(m + 2 * k);
  for (int p = std::max(0, -k); p <= m / 2; ++p) {
    Word w;
    w.letters.assign(p, Letter::I);
    w.letters.insert(w.letters.end(), p + k, Letter::J);
    out.add_term(w, DimRational(a_coef(p, m, k)));
  }
  return out;
}

NCPoly b_operator(int m, int q, int l) {
  if (l < 0 || l > q) throw std::invalid_argument("b_operator needs 0 <= l <= q");
  NCPoly out(m);
  for (const auto& [k, pk] : p_polys(q, m)) {
    if (m + 2 * k < 0) continue;
    auto split = radial_split(pk);
    auto it = split.find(l);
    if (it == split.end()) continue;
    NCPoly term = mul(c_operator(m, k), it->second);
    term *= gamma_coef(m, k);
    out += term;
  }
  return out;
}

NCPoly a_tilde(int m, int r, int l) {
  if (l < 0 || l > r) throw std::invalid_argument("a_tilde needs 0 <= l <= r");
  NCPoly out(m);
  for (int q = l; q <= r; ++q) {
    NCPoly b = b_operator(m, q, l);
    b *= DimRational(mpq_class(binom(r, q)));
    out += b;
  }
  return out;
}

NCPoly a_operator(int m, int r, int l) {
  NCPoly t = a_tilde(m, r, l);
  NCPoly s = t + adjoint(t);
  s *= DimRational(mpq_class(1, 2));
  return s;
}

std::string derivation_report(int m, int r, int l, const NCPoly& op, bool tilde) {
  nlohmann::ordered_json j;
  j["operator"] = tilde ? "A~" : "A";
  j["m"] = m;
  j["r"] = r;
  j["l"] = l;
  j["text"] = op.str();
  auto terms = nlohmann::ordered_json::array();
  for (const auto& [w, c] : op.terms())
    terms.push_back({{"word", w.str()}, {"coeff_num", c.num_str()}, {"coeff_den", c.den_str()}});
  j["terms"] = terms;
  nlohmann::ordered_json checks;
  checks["self_adjoint"] = (adjoint(op) == op);
  try {
    rank_flow_check(op, m);
    checks["rank_flow"] = true;
  } catch (const StructuralError& e) {
    checks["rank_flow"] = false;
    checks["rank_flow_error"] = e.what();
  }
  try {
    rank_flow_check(op, std::nullopt, 2 * l);
    checks["order"] = true;
  } catch (const StructuralError& e) {
    checks["order"] = false;
    checks["order_error"] = e.what();
  }
  j["checks"] = checks;
  return j.dump(2);
}

}  // namespace tt
