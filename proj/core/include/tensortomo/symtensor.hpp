#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace tt {

using cplx = std::complex<double>;

inline constexpr int kMaxRank = 8;

// Sorted multi-index, 0-based axes.
using MultiIndex = std::vector<int>;

// Enumeration of the sorted multi-indices of rank m over n axes, with a flat
// lookup from any (unsorted) tuple to its sorted position.
struct IndexLayout {
  int n = 0;
  int m = 0;
  std::vector<MultiIndex> indices;     // lexicographic
  std::vector<double> multiplicity;    // number of distinct permutations
  std::vector<int> full_to_sym;        // size n^m, mixed radix, first axis slowest
  std::vector<int> sym_to_full;        // a representative full offset

  int size() const { return static_cast<int>(indices.size()); }
  int full_size() const { return static_cast<int>(full_to_sym.size()); }
  int position(std::span<const int> tuple) const;
};

std::shared_ptr<const IndexLayout> layout(int n, int m);

long long dim(int n, int m);

// Dense full array of rank m with extent n on every axis; only used as a
// transient input to symmetrize and for brute-force checks.
struct FullTensor {
  int n = 0;
  int m = 0;
  std::vector<cplx> data;

  FullTensor() = default;
  FullTensor(int n_, int m_);
  cplx& at(std::span<const int> tuple);
  cplx at(std::span<const int> tuple) const;
};

class SymTensor {
 public:
  SymTensor() = default;
  SymTensor(int n, int m);

  int n() const { return n_; }
  int m() const { return m_; }
  int size() const { return static_cast<int>(comps_.size()); }
  const IndexLayout& lay() const { return *lay_; }

  cplx& operator[](int pos) { return comps_[pos]; }
  cplx operator[](int pos) const { return comps_[pos]; }
  cplx get(std::span<const int> tuple) const;
  void set(std::span<const int> tuple, cplx v);

  std::vector<cplx>& comps() { return comps_; }
  const std::vector<cplx>& comps() const { return comps_; }

  FullTensor to_full() const;

  SymTensor& operator+=(const SymTensor& o);
  SymTensor& operator-=(const SymTensor& o);
  SymTensor& operator*=(cplx c);
  friend SymTensor operator+(SymTensor a, const SymTensor& b) { return a += b; }
  friend SymTensor operator-(SymTensor a, const SymTensor& b) { return a -= b; }
  friend SymTensor operator*(cplx c, SymTensor a) { return a *= c; }

  double max_abs() const;

 private:
  int n_ = 0;
  int m_ = 0;
  std::shared_ptr<const IndexLayout> lay_;
  std::vector<cplx> comps_;
};

SymTensor symmetrize(const FullTensor& t);
SymTensor kron_mult_i(const SymTensor& f);
// Symmetric product with an arbitrary symmetric n×n matrix g (row-major).
SymTensor sym_mult_matrix(const SymTensor& f, std::span<const double> g);
SymTensor contract_j(const SymTensor& f);
cplx dot(const SymTensor& f, const SymTensor& g);
cplx power_eval(const SymTensor& f, std::span<const double> v);
SymTensor delta_power(int n, int mk);
SymTensor eps_power(std::span<const double> y, int mk);
cplx c_contract_oracle(const SymTensor& g, const SymTensor& h);

// Applies i^p j^q (j first) on plain tensors.
SymTensor apply_ij(const SymTensor& f, int p, int q);

// Serialization inside reports: {"n","m","components":{"1,2":[re,im],...}}.
std::string to_json(const SymTensor& f);
SymTensor from_json(const std::string& text);

}  // namespace tt
