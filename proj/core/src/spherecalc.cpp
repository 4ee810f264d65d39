#include "tensortomo/spherecalc.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace tt {

namespace {

int ipow(int b, int e) {
  int r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

Eigen::ArrayXcd ycol(const GridPtr& g, int k) { return g->nodes().col(k).cast<cplx>().array(); }

void same_grid(const TangentField& a, const TangentField& b) {
  if (a.grid != b.grid) throw std::invalid_argument("fields live on different grids");
  if (a.m != b.m) throw std::invalid_argument("fields have different ranks");
}

}  // namespace

TangentField::TangentField(GridPtr g, int rank)
    : grid(std::move(g)), m(rank), values(Eigen::MatrixXcd::Zero(grid->size(), dim(grid->n(), rank))) {}

SymTensor TangentField::at(int node) const {
  SymTensor t(n(), m);
  for (int s = 0; s < t.size(); ++s) t[s] = values(node, s);
  return t;
}

void TangentField::set(int node, const SymTensor& t) {
  for (int s = 0; s < t.size(); ++s) values(node, s) = t[s];
}

TangentField& TangentField::operator+=(const TangentField& o) {
  same_grid(*this, o);
  values += o.values;
  return *this;
}

TangentField& TangentField::operator-=(const TangentField& o) {
  same_grid(*this, o);
  values -= o.values;
  return *this;
}

TangentField& TangentField::operator*=(cplx c) {
  values *= c;
  return *this;
}

TangentField operator+(TangentField a, const TangentField& b) { return a += b; }
TangentField operator-(TangentField a, const TangentField& b) { return a -= b; }
TangentField operator*(cplx c, TangentField a) { return a *= c; }

double TangentField::max_abs() const { return values.size() ? values.cwiseAbs().maxCoeff() : 0.0; }

double TangentField::normal_residual() const {
  if (m == 0) return 0.0;
  const auto& lo = *layout(n(), m - 1);
  const auto& lf = *layout(n(), m);
  double worst = 0;
  std::vector<int> t(m);
  for (int s = 0; s < lo.size(); ++s) {
    Eigen::ArrayXcd acc = Eigen::ArrayXcd::Zero(grid->size());
    std::copy(lo.indices[s].begin(), lo.indices[s].end(), t.begin() + 1);
    for (int q = 0; q < n(); ++q) {
      t[0] = q;
      acc += ycol(grid, q) * values.col(lf.position(t)).array();
    }
    worst = std::max(worst, acc.abs().maxCoeff());
  }
  const double s = max_abs();
  return s > 0 ? worst / s : worst;
}

TangentField sample(GridPtr g, int m, const std::function<SymTensor(const Eigen::VectorXd&)>& f) {
  TangentField out(g, m);
  for (int a = 0; a < g->size(); ++a) {
    Eigen::VectorXd y = g->nodes().row(a).transpose();
    SymTensor t = f(y);
    if (t.m() != m || t.n() != g->n()) throw std::invalid_argument("sample: tensor shape mismatch");
    out.set(a, t);
  }
  return out;
}

FullField to_full(const TangentField& f) {
  const auto& lo = *layout(f.n(), f.m);
  FullField out{f.grid, f.m, Eigen::MatrixXcd(f.grid->size(), lo.full_size())};
  for (int i = 0; i < lo.full_size(); ++i) out.values.col(i) = f.values.col(lo.full_to_sym[i]);
  return out;
}

TangentField tangential_project(const TangentField& f) {
  const int n = f.n(), m = f.m;
  if (m == 0) return f;
  FullField full = to_full(f);
  const int total = ipow(n, m);
  for (int slot = 0; slot < m; ++slot) {
    const int stride = ipow(n, m - 1 - slot);
    Eigen::MatrixXcd next = full.values;
    for (int idx = 0; idx < total; ++idx) {
      const int digit = (idx / stride) % n;
      if (digit != 0) continue;
      // normal component along this slot
      Eigen::ArrayXcd dotv = Eigen::ArrayXcd::Zero(f.grid->size());
      for (int q = 0; q < n; ++q) dotv += ycol(f.grid, q) * full.values.col(idx + q * stride).array();
      for (int q = 0; q < n; ++q)
        next.col(idx + q * stride) = full.values.col(idx + q * stride).array() - ycol(f.grid, q) * dotv;
    }
    full.values = std::move(next);
  }
  const auto& lo = *layout(n, m);
  TangentField out(f.grid, m);
  for (int s = 0; s < lo.size(); ++s) out.values.col(s) = full.values.col(lo.sym_to_full[s]);
  return out;
}

FullField nabla(const FullField& f) {
  const int n = f.grid->n(), r = f.rank;
  const int total = ipow(n, r);
  auto G = f.grid->grad(f.values);
  FullField out{f.grid, r + 1, Eigen::MatrixXcd(f.grid->size(), n * total)};
  for (int k = 0; k < n; ++k) {
    for (int idx = 0; idx < total; ++idx) {
      Eigen::ArrayXcd acc = G[k].col(idx).array();
      for (int c = 0; c < r; ++c) {
        const int stride = ipow(n, r - 1 - c);
        const int ic = (idx / stride) % n;
        const int swapped = idx + (k - ic) * stride;
        acc += ycol(f.grid, ic) * f.values.col(swapped).array();
      }
      out.values.col(k * total + idx) = acc;
    }
  }
  return out;
}

FullField nabla(const TangentField& f) { return nabla(to_full(f)); }

FullField nabla2(const TangentField& f) { return nabla(nabla(to_full(f))); }

TangentField inner_d(const TangentField& f) {
  const int n = f.n(), m = f.m;
  auto G = f.grid->grad(f.values);
  TangentField out(f.grid, m + 1);
  const auto& lo = *layout(n, m + 1);
  const auto& li = *layout(n, m);
  std::vector<int> rest(m);
  for (int s = 0; s < lo.size(); ++s) {
    const auto& J = lo.indices[s];
    Eigen::ArrayXcd acc = Eigen::ArrayXcd::Zero(f.grid->size());
    for (int a = 0; a <= m; ++a) {
      int q = 0;
      for (int b = 0; b <= m; ++b)
        if (b != a) rest[q++] = J[b];
      const int p = li.position(rest);
      acc += G[J[a]].col(p).array();
      if (m > 0) acc += static_cast<double>(m) * ycol(f.grid, J[a]) * f.values.col(p).array();
    }
    out.values.col(s) = acc / static_cast<double>(m + 1);
  }
  return out;
}

TangentField trace_j(const TangentField& f) {
  if (f.m < 2) throw std::invalid_argument("trace_j needs rank >= 2");
  const int n = f.n(), m = f.m - 2;
  TangentField out(f.grid, m);
  const auto& lo = *layout(n, m);
  const auto& li = *layout(n, m + 2);
  std::vector<int> t(m + 2);
  for (int s = 0; s < lo.size(); ++s) {
    std::copy(lo.indices[s].begin(), lo.indices[s].end(), t.begin() + 2);
    Eigen::ArrayXcd acc = Eigen::ArrayXcd::Zero(f.grid->size());
    for (int k = 0; k < n; ++k) {
      t[0] = t[1] = k;
      acc += f.values.col(li.position(t)).array();
    }
    out.values.col(s) = acc;
  }
  return out;
}

TangentField divergence(const TangentField& f) {
  if (f.m < 1) throw std::invalid_argument("divergence needs rank >= 1");
  const int n = f.n(), m = f.m - 1;
  auto G = f.grid->grad(f.values);
  TangentField jf;
  if (m >= 1) jf = trace_j(f);
  TangentField out(f.grid, m);
  const auto& lo = *layout(n, m);
  const auto& li = *layout(n, m + 1);
  std::vector<int> t(m + 1), rest(m > 0 ? m - 1 : 0);
  const auto* lj = m >= 1 ? layout(n, m - 1).get() : nullptr;
  for (int s = 0; s < lo.size(); ++s) {
    const auto& I = lo.indices[s];
    std::copy(I.begin(), I.end(), t.begin() + 1);
    Eigen::ArrayXcd acc = Eigen::ArrayXcd::Zero(f.grid->size());
    for (int k = 0; k < n; ++k) {
      t[0] = k;
      acc += G[k].col(li.position(t)).array();
    }
    for (int a = 0; a < m; ++a) {
      int q = 0;
      for (int b = 0; b < m; ++b)
        if (b != a) rest[q++] = I[b];
      acc += ycol(f.grid, I[a]) * jf.values.col(lj->position(rest)).array();
    }
    out.values.col(s) = acc;
  }
  return out;
}

TangentField metric_i(const TangentField& f) {
  const int n = f.n(), m = f.m;
  TangentField out(f.grid, m + 2);
  const auto& lo = *layout(n, m + 2);
  const auto& li = *layout(n, m);
  const double npairs = (m + 2) * (m + 1) / 2.0;
  std::vector<int> rest(m);
  for (int s = 0; s < lo.size(); ++s) {
    const auto& J = lo.indices[s];
    Eigen::ArrayXcd acc = Eigen::ArrayXcd::Zero(f.grid->size());
    for (int a = 0; a < m + 2; ++a) {
      for (int b = a + 1; b < m + 2; ++b) {
        int q = 0;
        for (int c = 0; c < m + 2; ++c)
          if (c != a && c != b) rest[q++] = J[c];
        Eigen::ArrayXcd g = -(ycol(f.grid, J[a]) * ycol(f.grid, J[b]));
        if (J[a] == J[b]) g += 1.0;
        acc += g * f.values.col(li.position(rest)).array();
      }
    }
    out.values.col(s) = acc / npairs;
  }
  return out;
}

TangentField apply_ncpoly(const NCPoly& p, const TangentField& f, double radius) {
  if (p.base_rank() != f.m)
    throw StructuralError("operator base rank " + std::to_string(p.base_rank()) + " does not match field rank " +
                          std::to_string(f.m));
  auto out_rank = p.out_rank();
  if (!out_rank) return TangentField(f.grid, f.m);
  rank_flow_check(p, *out_rank);
  const long n0 = f.n();
  std::map<std::vector<Letter>, TangentField> memo;
  std::function<const TangentField&(const std::vector<Letter>&, std::size_t)> eval =
      [&](const std::vector<Letter>& w, std::size_t i) -> const TangentField& {
    if (i == w.size()) return f;
    std::vector<Letter> key(w.begin() + static_cast<long>(i), w.end());
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    const TangentField& inner = eval(w, i + 1);
    TangentField v;
    switch (w[i]) {
      case Letter::I:
        v = metric_i(inner);
        break;
      case Letter::J:
        v = trace_j(inner);
        break;
      case Letter::D:
        v = inner_d(inner);
        break;
      case Letter::DELTA:
        v = divergence(inner);
        break;
    }
    return memo.emplace(std::move(key), std::move(v)).first->second;
  };
  TangentField acc(f.grid, *out_rank);
  for (const auto& [w, c] : p.terms()) {
    double coef = c.eval(n0).get_d();
    coef *= std::pow(radius, 2 * w.rad - w.order());
    acc.values += coef * eval(w.letters, 0).values;
  }
  return acc;
}

cplx sphere_integrate(GridPtr g, const Eigen::VectorXcd& vals) {
  if (vals.size() != g->size()) throw std::invalid_argument("sphere_integrate: size mismatch");
  cplx acc = 0;
  for (int a = 0; a < g->size(); ++a) acc += g->weights()(a) * vals(a);
  return acc;
}

cplx sphere_inner(const TangentField& u, const TangentField& v) {
  same_grid(u, v);
  const auto& lo = *layout(u.n(), u.m);
  Eigen::VectorXcd per = Eigen::VectorXcd::Zero(u.grid->size());
  for (int s = 0; s < lo.size(); ++s)
    per.array() += lo.multiplicity[s] * u.values.col(s).array() * v.values.col(s).array().conjugate();
  return sphere_integrate(u.grid, per);
}

namespace {

double rel_residual(const TangentField& a, const TangentField& b) {
  const double s = std::max(a.max_abs(), b.max_abs());
  const double r = (a - b).max_abs();
  return s > 0 ? r / s : r;
}

}  // namespace

JD2Identities jd2_identity_check(const TangentField& f) {
  if (f.m != 2) throw std::invalid_argument("jd2_identity_check needs a rank-2 field");
  JD2Identities out{};
  out.scale = f.max_abs();
  auto ap = [&](const char* text) { return apply_ncpoly(NCPoly::parse(text, 2), f); };
  out.jd2 = rel_residual(ap("j d^2"), ap("(1/3) * d δ + (1/2) * δ d + (1/6) * d^2 j"));
  out.j2d2 = rel_residual(ap("j^2 d^2"), ap("(2/3) * δ^2 + (1/3) * δ d j"));
  out.d2form = rel_residual(ap("-(1/2) * j d^2 - (1/8) * i j^2 d^2"),
                            ap("-(1/6) * d δ - (1/4) * δ d - (1/24) * i δ d j - (1/12) * d^2 j - (1/12) * i δ^2"));
  return out;
}

void write_columnar(std::ostream& os, const TangentField& f) {
  const auto& lo = *layout(f.n(), f.m);
  os << "# n " << f.n() << " m " << f.m << " nodes " << f.grid->size() << "\n# y";
  for (int k = 1; k < f.n(); ++k) os << " .";
  os << " weight";
  for (int s = 0; s < lo.size(); ++s) {
    std::string tag = "c";
    for (int i : lo.indices[s]) tag += std::to_string(i + 1);
    os << " " << tag << ".re " << tag << ".im";
  }
  os << "\n";
  os.precision(17);
  for (int a = 0; a < f.grid->size(); ++a) {
    for (int k = 0; k < f.n(); ++k) os << f.grid->nodes()(a, k) << " ";
    os << f.grid->weights()(a);
    for (int s = 0; s < lo.size(); ++s) os << " " << f.values(a, s).real() << " " << f.values(a, s).imag();
    os << "\n";
  }
}

}  // namespace tt
