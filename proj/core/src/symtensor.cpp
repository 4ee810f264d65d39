#include "tensortomo/symtensor.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>

#include "json.hpp"

namespace tt {

namespace {

void check_nm(int n, int m) {
  if (n < 1 || m < 0) throw std::invalid_argument("invalid (n, m) for a symmetric tensor");
  if (m > kMaxRank) throw std::invalid_argument("rank exceeds the supported cap of 8");
}

int ipow(int b, int e) {
  int r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

double factorial(int k) {
  double r = 1;
  for (int i = 2; i <= k; ++i) r *= i;
  return r;
}

double double_factorial_odd(int k) {  // (k)!! for odd k, 1 for k <= 0
  double r = 1;
  for (int i = k; i > 1; i -= 2) r *= i;
  return r;
}

std::shared_ptr<IndexLayout> build_layout(int n, int m) {
  auto lay = std::make_shared<IndexLayout>();
  lay->n = n;
  lay->m = m;
  MultiIndex cur(m, 0);
  // lexicographic enumeration of non-decreasing tuples
  while (true) {
    lay->indices.push_back(cur);
    int pos = m - 1;
    while (pos >= 0 && cur[pos] == n - 1) --pos;
    if (pos < 0) break;
    int v = cur[pos] + 1;
    for (int q = pos; q < m; ++q) cur[q] = v;
  }
  std::map<MultiIndex, int> where;
  for (int s = 0; s < lay->size(); ++s) {
    const auto& I = lay->indices[s];
    where[I] = s;
    std::vector<int> counts(n, 0);
    for (int a : I) ++counts[a];
    double mult = factorial(m);
    for (int c : counts) mult /= factorial(c);
    lay->multiplicity.push_back(mult);
  }
  const int full = ipow(n, m);
  lay->full_to_sym.resize(full);
  lay->sym_to_full.assign(lay->size(), -1);
  std::vector<int> t(m);
  for (int off = 0; off < full; ++off) {
    int r = off;
    for (int a = m - 1; a >= 0; --a) {
      t[a] = r % n;
      r /= n;
    }
    MultiIndex s(t);
    std::sort(s.begin(), s.end());
    int pos = where.at(s);
    lay->full_to_sym[off] = pos;
    if (lay->sym_to_full[pos] < 0) lay->sym_to_full[pos] = off;
  }
  return lay;
}

}  // namespace

int IndexLayout::position(std::span<const int> tuple) const {
  if (static_cast<int>(tuple.size()) != m) throw std::invalid_argument("index tuple has wrong length");
  int off = 0;
  for (int a : tuple) {
    if (a < 0 || a >= n) throw std::out_of_range("index outside [0, n)");
    off = off * n + a;
  }
  return full_to_sym[off];
}

std::shared_ptr<const IndexLayout> layout(int n, int m) {
  check_nm(n, m);
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::shared_ptr<const IndexLayout>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(n, m);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto lay = build_layout(n, m);
  cache[key] = lay;
  return lay;
}

long long dim(int n, int m) {
  if (n < 1 || m < 0) throw std::invalid_argument("dim: need n >= 1 and m >= 0");
  // binom(n+m-1, m)
  long long r = 1;
  for (int i = 1; i <= m; ++i) r = r * (n - 1 + i) / i;
  return r;
}

FullTensor::FullTensor(int n_, int m_) : n(n_), m(m_) {
  check_nm(n_, m_);
  data.assign(ipow(n_, m_), cplx(0));
}

cplx& FullTensor::at(std::span<const int> tuple) {
  int off = 0;
  for (int a : tuple) off = off * n + a;
  return data[off];
}

cplx FullTensor::at(std::span<const int> tuple) const {
  int off = 0;
  for (int a : tuple) off = off * n + a;
  return data[off];
}

SymTensor::SymTensor(int n, int m) : n_(n), m_(m), lay_(layout(n, m)) {
  comps_.assign(lay_->size(), cplx(0));
}

cplx SymTensor::get(std::span<const int> tuple) const { return comps_[lay_->position(tuple)]; }

void SymTensor::set(std::span<const int> tuple, cplx v) { comps_[lay_->position(tuple)] = v; }

FullTensor SymTensor::to_full() const {
  FullTensor t(n_, m_);
  for (int off = 0; off < static_cast<int>(t.data.size()); ++off)
    t.data[off] = comps_[lay_->full_to_sym[off]];
  return t;
}

SymTensor& SymTensor::operator+=(const SymTensor& o) {
  if (o.n_ != n_ || o.m_ != m_) throw std::invalid_argument("shape mismatch in tensor sum");
  for (int s = 0; s < size(); ++s) comps_[s] += o.comps_[s];
  return *this;
}

SymTensor& SymTensor::operator-=(const SymTensor& o) {
  if (o.n_ != n_ || o.m_ != m_) throw std::invalid_argument("shape mismatch in tensor difference");
  for (int s = 0; s < size(); ++s) comps_[s] -= o.comps_[s];
  return *this;
}

SymTensor& SymTensor::operator*=(cplx c) {
  for (auto& v : comps_) v *= c;
  return *this;
}

double SymTensor::max_abs() const {
  double r = 0;
  for (auto v : comps_) r = std::max(r, std::abs(v));
  return r;
}

SymTensor symmetrize(const FullTensor& t) {
  if (static_cast<int>(t.data.size()) != ipow(t.n, t.m)) throw std::invalid_argument("ragged array passed to symmetrize");
  SymTensor out(t.n, t.m);
  const auto& lay = out.lay();
  for (int off = 0; off < lay.full_size(); ++off) out[lay.full_to_sym[off]] += t.data[off];
  for (int s = 0; s < out.size(); ++s) out[s] /= lay.multiplicity[s];
  return out;
}

SymTensor sym_mult_matrix(const SymTensor& f, std::span<const double> g) {
  const int n = f.n(), m = f.m();
  if (static_cast<int>(g.size()) != n * n) throw std::invalid_argument("metric has wrong size");
  SymTensor out(n, m + 2);
  const auto& lo = out.lay();
  const auto& li = f.lay();
  const double npairs = (m + 2) * (m + 1) / 2.0;
  std::vector<int> rest(m);
  for (int s = 0; s < out.size(); ++s) {
    const auto& I = lo.indices[s];
    cplx acc = 0;
    for (int a = 0; a < m + 2; ++a) {
      for (int b = a + 1; b < m + 2; ++b) {
        int q = 0;
        for (int c = 0; c < m + 2; ++c)
          if (c != a && c != b) rest[q++] = I[c];
        acc += g[I[a] * n + I[b]] * f[li.position(rest)];
      }
    }
    out[s] = acc / npairs;
  }
  return out;
}

SymTensor kron_mult_i(const SymTensor& f) {
  const int n = f.n();
  std::vector<double> id(n * n, 0.0);
  for (int a = 0; a < n; ++a) id[a * n + a] = 1.0;
  return sym_mult_matrix(f, id);
}

SymTensor contract_j(const SymTensor& f) {
  if (f.m() < 2) throw std::invalid_argument("contract_j needs rank >= 2");
  const int n = f.n(), m = f.m() - 2;
  SymTensor out(n, m);
  const auto& lo = out.lay();
  const auto& li = f.lay();
  std::vector<int> t(m + 2);
  for (int s = 0; s < out.size(); ++s) {
    const auto& I = lo.indices[s];
    for (int a = 0; a < m; ++a) t[a + 2] = I[a];
    cplx acc = 0;
    for (int p = 0; p < n; ++p) {
      t[0] = p;
      t[1] = p;
      acc += f[li.position(t)];
    }
    out[s] = acc;
  }
  return out;
}

cplx dot(const SymTensor& f, const SymTensor& g) {
  if (f.n() != g.n() || f.m() != g.m()) throw std::invalid_argument("dot: shape mismatch");
  const auto& lay = f.lay();
  cplx acc = 0;
  for (int s = 0; s < f.size(); ++s) acc += lay.multiplicity[s] * f[s] * std::conj(g[s]);
  return acc;
}

cplx power_eval(const SymTensor& f, std::span<const double> v) {
  if (static_cast<int>(v.size()) != f.n()) throw std::invalid_argument("power_eval: dimension mismatch");
  const auto& lay = f.lay();
  cplx acc = 0;
  for (int s = 0; s < f.size(); ++s) {
    double w = lay.multiplicity[s];
    for (int a : lay.indices[s]) w *= v[a];
    acc += w * f[s];
  }
  return acc;
}

namespace {

// Average over perfect matchings of the 2K slots of prod g(pair).
template <class G>
double matching_average(const MultiIndex& I, G&& g) {
  const int len = static_cast<int>(I.size());
  if (len == 0) return 1.0;
  std::vector<int> slots(len);
  std::iota(slots.begin(), slots.end(), 0);
  double total = 0;
  long count = 0;
  // recursive enumeration
  std::vector<char> used(len, 0);
  auto rec = [&](auto&& self, double prod) -> void {
    int first = -1;
    for (int a = 0; a < len; ++a)
      if (!used[a]) {
        first = a;
        break;
      }
    if (first < 0) {
      total += prod;
      ++count;
      return;
    }
    used[first] = 1;
    for (int b = first + 1; b < len; ++b) {
      if (used[b]) continue;
      used[b] = 1;
      self(self, prod * g(I[first], I[b]));
      used[b] = 0;
    }
    used[first] = 0;
  };
  rec(rec, 1.0);
  return total / static_cast<double>(count);
}

}  // namespace

SymTensor delta_power(int n, int mk) {
  if (mk < 0) throw std::invalid_argument("delta_power: negative order");
  SymTensor out(n, 2 * mk);
  for (int s = 0; s < out.size(); ++s)
    out[s] = matching_average(out.lay().indices[s], [](int a, int b) { return a == b ? 1.0 : 0.0; });
  return out;
}

SymTensor eps_power(std::span<const double> y, int mk) {
  if (mk < 0) throw std::invalid_argument("eps_power: negative order");
  const int n = static_cast<int>(y.size());
  double y2 = 0;
  for (double v : y) y2 += v * v;
  if (y2 == 0) throw std::invalid_argument("eps_power: y must be nonzero");
  std::vector<double> P(n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) P[a * n + b] = (a == b ? 1.0 : 0.0) - y[a] * y[b] / y2;
  SymTensor out(n, 2 * mk);
  for (int s = 0; s < out.size(); ++s)
    out[s] = matching_average(out.lay().indices[s], [&](int a, int b) { return P[a * n + b]; });
  return out;
}

cplx c_contract_oracle(const SymTensor& g, const SymTensor& h) {
  if (g.n() != h.n()) throw std::invalid_argument("c_contract_oracle: dimension mismatch");
  const int n = g.n();
  const int rg = g.m(), rh = h.m();
  if ((rg + rh) % 2 != 0) throw std::invalid_argument("c_contract_oracle: ranks of g and h must have equal parity");
  const int len = rg + rh;
  const int K = len / 2;
  const double norm = double_factorial_odd(2 * K - 1);
  const long total = ipow(n, len);
  const auto& lg = g.lay();
  const auto& lh = h.lay();
  std::vector<int> t(len, 0), counts(n, 0);
  cplx acc = 0;
  for (long off = 0; off < total; ++off) {
    long r = off;
    for (int a = len - 1; a >= 0; --a) {
      t[a] = static_cast<int>(r % n);
      r /= n;
    }
    std::fill(counts.begin(), counts.end(), 0);
    for (int a : t) ++counts[a];
    double w = 1;
    for (int c : counts) {
      if (c % 2) {
        w = 0;
        break;
      }
      w *= double_factorial_odd(c - 1);
    }
    if (w == 0) continue;
    int og = 0, oh = 0;
    for (int a = 0; a < rg; ++a) og = og * n + t[a];
    for (int a = rg; a < len; ++a) oh = oh * n + t[a];
    acc += (w / norm) * g[lg.full_to_sym[og]] * std::conj(h[lh.full_to_sym[oh]]);
  }
  return acc;
}

SymTensor apply_ij(const SymTensor& f, int p, int q) {
  SymTensor cur = f;
  for (int a = 0; a < q; ++a) cur = contract_j(cur);
  for (int a = 0; a < p; ++a) cur = kron_mult_i(cur);
  return cur;
}

std::string to_json(const SymTensor& f) {
  nlohmann::ordered_json j;
  j["n"] = f.n();
  j["m"] = f.m();
  nlohmann::ordered_json comps = nlohmann::ordered_json::object();
  for (int s = 0; s < f.size(); ++s) {
    std::string key;
    for (int a : f.lay().indices[s]) {
      if (!key.empty()) key += ",";
      key += std::to_string(a + 1);
    }
    comps[key] = {f[s].real(), f[s].imag()};
  }
  j["components"] = comps;
  return j.dump();
}

SymTensor from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  SymTensor f(j.at("n").get<int>(), j.at("m").get<int>());
  for (auto& [key, val] : j.at("components").items()) {
    std::vector<int> idx;
    std::size_t start = 0;
    while (start < key.size()) {
      std::size_t comma = key.find(',', start);
      if (comma == std::string::npos) comma = key.size();
      idx.push_back(std::stoi(key.substr(start, comma - start)) - 1);
      start = comma + 1;
    }
    f.set(idx, cplx(val.at(0).get<double>(), val.at(1).get<double>()));
  }
  return f;
}

}  // namespace tt
