#include <cmath>
#include <istream>
#include <numbers>
#include <ostream>
#include <sstream>

#include "tensortomo/fourier.hpp"
#include "tensortomo/raykit.hpp"

namespace tt {

namespace {

long ipow(long b, int e) {
  long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

void check_same(const VolumeField& a, const VolumeField& b) {
  if (a.n != b.n || a.m != b.m || a.shape != b.shape || a.extent != b.extent || a.dual != b.dual)
    throw std::invalid_argument("volume fields live on different grids");
}

// Voxel index -> coordinates.
void voxel_coords(const VolumeField& f, long v, double* x) {
  for (int a = f.n - 1; a >= 0; --a) {
    x[a] = f.coord(static_cast<int>(v % f.shape));
    v /= f.shape;
  }
}

void transform_axes(VolumeField& f, int sign) {
  const int N = f.shape;
  for (int c = 0; c < f.values.cols(); ++c) {
    cplx* data = f.values.col(c).data();
    for (int a = 0; a < f.n; ++a) {
      const long inner = ipow(N, f.n - 1 - a);
      const long outer = ipow(N, a);
      for (long o = 0; o < outer; ++o)
        centered_dft(data + o * N * inner, N, static_cast<int>(inner), static_cast<int>(inner), 1, sign);
    }
  }
}

// Projects every slot of a symmetric tensor with I - u u^T, u a unit vector.
void project_slots(SymTensor& t, const double* u) {
  const int n = t.n(), m = t.m();
  if (m == 0) return;
  const auto& lo = t.lay();
  std::vector<cplx> full(lo.full_size());
  for (int i = 0; i < lo.full_size(); ++i) full[i] = t[lo.full_to_sym[i]];
  const int total = lo.full_size();
  for (int slot = 0; slot < m; ++slot) {
    const int stride = static_cast<int>(ipow(n, m - 1 - slot));
    for (int idx = 0; idx < total; ++idx) {
      if ((idx / stride) % n != 0) continue;
      cplx d = 0;
      for (int q = 0; q < n; ++q) d += u[q] * full[idx + q * stride];
      for (int q = 0; q < n; ++q) full[idx + q * stride] -= u[q] * d;
    }
  }
  for (int s = 0; s < lo.size(); ++s) t[s] = full[lo.sym_to_full[s]];
}

}  // namespace

VolumeField::VolumeField(int n_, int m_, double L, int N) : n(n_), m(m_), extent(L), shape(N) {
  if (n != 2 && n != 3) throw std::invalid_argument("volume fields need n in {2, 3}");
  if (N < 4 || N % 2 != 0) throw std::invalid_argument("volume shape must be even");
  values = Eigen::MatrixXcd::Zero(voxels(), dim(n, m));
}

long VolumeField::voxels() const { return ipow(shape, n); }

double VolumeField::envelope() const {
  double inner = 0, edge = 0;
  for (long v = 0; v < voxels(); ++v) {
    long w = v;
    bool boundary = false;
    for (int a = 0; a < n; ++a) {
      const long j = w % shape;
      w /= shape;
      if (j == 0 || j == shape - 1) boundary = true;
    }
    const double mx = values.row(v).cwiseAbs().maxCoeff();
    inner = std::max(inner, mx);
    if (boundary) edge = std::max(edge, mx);
  }
  return inner > 0 ? edge / inner : 0.0;
}

VolumeField& VolumeField::operator+=(const VolumeField& o) {
  check_same(*this, o);
  values += o.values;
  return *this;
}

VolumeField& VolumeField::operator*=(cplx c) {
  values *= c;
  return *this;
}

VolumeField sample_volume(int n, int m, double L, int N,
                          const std::function<SymTensor(const double*)>& f) {
  VolumeField out(n, m, L, N);
  double x[3];
  for (long v = 0; v < out.voxels(); ++v) {
    voxel_coords(out, v, x);
    SymTensor t = f(x);
    if (t.n() != n || t.m() != m) throw std::invalid_argument("sampled tensor has the wrong shape");
    for (int s = 0; s < t.size(); ++s) out.values(v, s) = t[s];
  }
  return out;
}

VolumeField sample_volume(const TestField& f, double L, int N) {
  return sample_volume(f.n, f.m, L, N, [&](const double* x) { return f.at(x); });
}

VolumeField fourier_volume(const VolumeField& f) {
  if (f.dual) throw std::invalid_argument("fourier_volume expects a primal field");
  VolumeField out = f;
  transform_axes(out, -1);
  out.values *= std::pow(f.spacing() / std::sqrt(2 * std::numbers::pi), f.n);
  out.dual = true;
  out.extent = f.shape * std::numbers::pi / (2 * f.extent);
  return out;
}

VolumeField inverse_fourier_volume(const VolumeField& fh) {
  if (!fh.dual) throw std::invalid_argument("inverse_fourier_volume expects a dual field");
  VolumeField out = fh;
  transform_axes(out, +1);
  out.values *= std::pow(fh.spacing() / std::sqrt(2 * std::numbers::pi), fh.n);
  out.dual = false;
  out.extent = fh.shape * std::numbers::pi / (2 * fh.extent);
  return out;
}

VolumeField solenoidal_project(const VolumeField& f) {
  if (f.m == 0) return f;
  VolumeField fh = fourier_volume(f);
  double y[3], u[3];
  SymTensor t(f.n, f.m);
  for (long v = 0; v < fh.voxels(); ++v) {
    voxel_coords(fh, v, y);
    double r2 = 0;
    for (int a = 0; a < f.n; ++a) r2 += y[a] * y[a];
    if (r2 == 0) {
      fh.values.row(v).setZero();
      continue;
    }
    const double r = std::sqrt(r2);
    for (int a = 0; a < f.n; ++a) u[a] = y[a] / r;
    for (int s = 0; s < t.size(); ++s) t[s] = fh.values(v, s);
    project_slots(t, u);
    for (int s = 0; s < t.size(); ++s) fh.values(v, s) = t[s];
  }
  return inverse_fourier_volume(fh);
}

double tangential_residual(const VolumeField& fh) {
  if (!fh.dual) throw std::invalid_argument("tangential_residual expects a dual field");
  if (fh.m == 0) return 0.0;
  const double scale = fh.values.cwiseAbs().maxCoeff();
  if (scale == 0) return 0.0;
  double y[3], worst = 0;
  SymTensor t(fh.n, fh.m);
  for (long v = 0; v < fh.voxels(); ++v) {
    voxel_coords(fh, v, y);
    double r2 = 0;
    for (int a = 0; a < fh.n; ++a) r2 += y[a] * y[a];
    if (r2 == 0) continue;
    const double r = std::sqrt(r2);
    for (int s = 0; s < t.size(); ++s) t[s] = fh.values(v, s);
    SymTensor p = t;
    double u[3];
    for (int a = 0; a < fh.n; ++a) u[a] = y[a] / r;
    project_slots(p, u);
    worst = std::max(worst, (t - p).max_abs());
  }
  return worst / scale;
}

void write_volume(std::ostream& os, const VolumeField& f) {
  os << "tensortomo-volume 1\n";
  os << f.n << ' ' << f.m << ' ';
  os.precision(17);
  os << f.extent << ' ' << f.shape << ' ' << (f.dual ? 1 : 0) << '\n';
  const auto& lo = *layout(f.n, f.m);
  for (int s = 0; s < lo.size(); ++s) {
    if (s) os << ' ';
    if (lo.indices[s].empty()) os << '-';
    for (size_t k = 0; k < lo.indices[s].size(); ++k) os << (k ? "," : "") << lo.indices[s][k];
  }
  os << '\n';
  for (long v = 0; v < f.voxels(); ++v)
    for (int s = 0; s < lo.size(); ++s) {
      const double re = f.values(v, s).real(), im = f.values(v, s).imag();
      os.write(reinterpret_cast<const char*>(&re), sizeof re);
      os.write(reinterpret_cast<const char*>(&im), sizeof im);
    }
}

VolumeField read_volume(std::istream& is) {
  std::string magic, line;
  std::getline(is, magic);
  if (magic != "tensortomo-volume 1") throw std::runtime_error("not a volume file");
  std::getline(is, line);
  std::istringstream hs(line);
  int n, m, shape, dual;
  double L;
  if (!(hs >> n >> m >> L >> shape >> dual)) throw std::runtime_error("bad volume header");
  VolumeField f(n, m, L, shape);
  f.dual = dual != 0;
  std::getline(is, line);  // component order, fixed by the layout
  for (long v = 0; v < f.voxels(); ++v)
    for (int s = 0; s < f.values.cols(); ++s) {
      double re, im;
      is.read(reinterpret_cast<char*>(&re), sizeof re);
      is.read(reinterpret_cast<char*>(&im), sizeof im);
      if (!is) throw std::runtime_error("truncated volume file");
      f.values(v, s) = cplx(re, im);
    }
  return f;
}

// ---------------------------------------------------------------------------

namespace {

constexpr int kHalfWidth = 20;
constexpr double kOversample = 4.0;

double kernel(double u) {
  static const double r2 = kHalfWidth / (std::numbers::pi * (1 - 1 / kOversample));
  const double a = std::numbers::pi * u;
  const double s = std::abs(a) < 1e-12 ? 1.0 : std::sin(a) / a;
  return s * std::exp(-u * u / (2 * r2));
}

}  // namespace

FourierEvaluator::FourierEvaluator(const VolumeField& f, double radius)
    : n_(f.n), m_(f.m), radius_(radius) {
  if (f.dual) throw std::invalid_argument("FourierEvaluator expects a primal field");
  if (f.n != 2) throw std::invalid_argument("FourierEvaluator supports n = 2");
  step_ = std::numbers::pi / (kOversample * f.extent);
  const int half = static_cast<int>(std::ceil(radius / step_)) + kHalfWidth + 1;
  count_ = 2 * half + 1;
  origin_ = -half * step_;
  const int N = f.shape;
  Eigen::MatrixXcd E(count_, N);
  for (int p = 0; p < count_; ++p)
    for (int j = 0; j < N; ++j) E(p, j) = std::polar(1.0, -(origin_ + p * step_) * f.coord(j));
  const double scale = f.spacing() * f.spacing() / (2 * std::numbers::pi);
  using RowMat = Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  for (int c = 0; c < f.values.cols(); ++c) {
    Eigen::Map<const RowMat> F(f.values.col(c).data(), N, N);
    Eigen::MatrixXcd tmp = E * F;
    patch_.push_back(scale * (tmp * E.transpose()));
  }
}

SymTensor FourierEvaluator::operator()(const double* y) const {
  SymTensor out(n_, m_);
  const double u0 = (y[0] - origin_) / step_, u1 = (y[1] - origin_) / step_;
  const int i0 = static_cast<int>(std::floor(u0)), i1 = static_cast<int>(std::floor(u1));
  double w0[2 * kHalfWidth], w1[2 * kHalfWidth];
  for (int k = 0; k < 2 * kHalfWidth; ++k) {
    w0[k] = kernel(u0 - (i0 - kHalfWidth + 1 + k));
    w1[k] = kernel(u1 - (i1 - kHalfWidth + 1 + k));
  }
  for (int c = 0; c < out.size(); ++c) {
    cplx acc = 0;
    for (int a = 0; a < 2 * kHalfWidth; ++a) {
      const int p = i0 - kHalfWidth + 1 + a;
      if (p < 0 || p >= count_) continue;
      cplx row = 0;
      for (int b = 0; b < 2 * kHalfWidth; ++b) {
        const int q = i1 - kHalfWidth + 1 + b;
        if (q < 0 || q >= count_) continue;
        row += w1[b] * patch_[c](p, q);
      }
      acc += w0[a] * row;
    }
    out[c] = acc;
  }
  return out;
}

}  // namespace tt
