#include "bjop/grid.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <mutex>

#include "bjop/errors.hpp"

namespace bjop {

double Grid::pi() { return 3.141592653589793238462643383279502884; }

Grid::Grid(int n, double length) : N(n), L(length) {
  if (N < 8 || (N & (N - 1)) != 0) throw GridError("grid size must be a power of two >= 8");
  if (!(L > 0) || !std::isfinite(L)) throw GridError("grid period must be positive and finite");
}

namespace {

void ensure_finite(const std::vector<cplx>& v) {
  for (const cplx& z : v)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      throw GridError("non-finite sample");
}

void ensure_same_grid(const GridFunction& a, const GridFunction& b) {
  if (!(a.grid() == b.grid())) throw GridError("grid mismatch");
}

// in-place complex FFT; sign is FFTW_FORWARD or FFTW_BACKWARD (unnormalized).
// The FFTW planner is not thread-safe, so plan bookkeeping is serialized;
// execution itself runs outside the lock.
void fft(std::vector<cplx>& v, int sign) {
  static std::mutex planner_mutex;
  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lock(planner_mutex);
    plan = fftw_plan_dft_1d(static_cast<int>(v.size()),
                            reinterpret_cast<fftw_complex*>(v.data()),
                            reinterpret_cast<fftw_complex*>(v.data()),
                            sign, FFTW_ESTIMATE);
  }
  fftw_execute(plan);
  {
    std::lock_guard<std::mutex> lock(planner_mutex);
    fftw_destroy_plan(plan);
  }
}

bool near_integer(double q, double* out) {
  double r = std::round(q);
  if (std::abs(q - r) <= 1e-9 * std::max(1.0, std::abs(q))) {
    *out = r;
    return true;
  }
  return false;
}

}  // namespace

GridFunction::GridFunction(const Grid& g, Domain d)
    : grid_(g), domain_(d), v_(static_cast<std::size_t>(g.N), cplx{0.0, 0.0}) {}

GridFunction::GridFunction(const Grid& g, std::vector<cplx> values, Domain d)
    : grid_(g), domain_(d), v_(std::move(values)) {
  if (v_.size() != static_cast<std::size_t>(g.N)) throw GridError("sample count does not match grid");
  ensure_finite(v_);
}

GridFunction GridFunction::sample(const Grid& g, const std::function<cplx(double)>& f) {
  std::vector<cplx> v(static_cast<std::size_t>(g.N));
  for (int m = 0; m < g.N; ++m) v[static_cast<std::size_t>(m)] = f(g.x(m));
  return GridFunction(g, std::move(v));
}

GridFunction GridFunction::gaussian(const Grid& g) {
  return sample(g, [](double x) { return cplx{std::exp(-0.5 * x * x), 0.0}; });
}

GridFunction GridFunction::hermite1(const Grid& g) {
  return sample(g, [](double x) { return cplx{x * std::exp(-0.5 * x * x), 0.0}; });
}

GridFunction GridFunction::planewave(const Grid& g, int k) {
  const double w = g.dxi() * k;
  return sample(g, [w](double x) { return std::polar(1.0, w * x); });
}

double GridFunction::norm() const {
  const double w = domain_ == Domain::Space ? grid_.dx() : grid_.dxi();
  double s = 0;
  for (const cplx& z : v_) s += std::norm(z);
  return std::sqrt(w * s);
}

GridFunction& GridFunction::operator+=(const GridFunction& o) {
  ensure_same_grid(*this, o);
  if (domain_ != o.domain_) throw GridError("domain mismatch");
  for (std::size_t m = 0; m < v_.size(); ++m) v_[m] += o.v_[m];
  return *this;
}

GridFunction& GridFunction::operator-=(const GridFunction& o) {
  ensure_same_grid(*this, o);
  if (domain_ != o.domain_) throw GridError("domain mismatch");
  for (std::size_t m = 0; m < v_.size(); ++m) v_[m] -= o.v_[m];
  return *this;
}

GridFunction& GridFunction::operator*=(cplx s) {
  for (cplx& z : v_) z *= s;
  return *this;
}

cplx inner(const GridFunction& u, const GridFunction& v) {
  ensure_same_grid(u, v);
  if (u.domain() != v.domain()) throw GridError("domain mismatch");
  const double w = u.domain() == Domain::Space ? u.grid().dx() : u.grid().dxi();
  cplx s{0.0, 0.0};
  for (std::size_t m = 0; m < u.values().size(); ++m)
    s += u.values()[m] * std::conj(v.values()[m]);
  return w * s;
}

GridFunction dft_forward(const GridFunction& u) {
  if (u.domain() != Domain::Space) throw GridError("dft_forward expects a space-domain function");
  const Grid& g = u.grid();
  std::vector<cplx> a = u.values();
  ensure_finite(a);
  fft(a, FFTW_FORWARD);  // a[k mod N] = sum_m u_m e^{-2 pi i k m / N}
  // u(x_m) with x_m = -L/2 + m dx gives  Fu(xi_k) = S (-1)^k a[k mod N],
  // S = L / (N sqrt(2 pi)).
  const double S = g.L / (g.N * std::sqrt(2 * Grid::pi()));
  std::vector<cplx> out(static_cast<std::size_t>(g.N));
  for (int j = 0; j < g.N; ++j) {
    const int k = j - g.N / 2;
    const int kmod = (k + g.N) % g.N;
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    out[static_cast<std::size_t>(j)] = S * sign * a[static_cast<std::size_t>(kmod)];
  }
  return GridFunction(g, std::move(out), Domain::Frequency);
}

GridFunction dft_inverse(const GridFunction& spec) {
  if (spec.domain() != Domain::Frequency) throw GridError("dft_inverse expects a frequency-domain function");
  const Grid& g = spec.grid();
  std::vector<cplx> b(static_cast<std::size_t>(g.N));
  for (int j = 0; j < g.N; ++j) {
    const int k = j - g.N / 2;
    const int kmod = (k + g.N) % g.N;
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    b[static_cast<std::size_t>(kmod)] = sign * spec.values()[static_cast<std::size_t>(j)];
  }
  ensure_finite(b);
  fft(b, FFTW_BACKWARD);  // b_m = sum_k c_k e^{+2 pi i k m / N}
  const double S = g.L / (g.N * std::sqrt(2 * Grid::pi()));
  const double scale = 1.0 / (S * g.N);
  for (cplx& z : b) z *= scale;
  return GridFunction(g, std::move(b), Domain::Space);
}

bool PhasePoint::commensurate(const Grid& g) const {
  double dummy;
  return near_integer(x0 / g.dxi(), &dummy) && near_integer(xi0 / g.dx(), &dummy);
}

double sinc(double t) {
  if (std::abs(t) < 1e-6) {
    const double t2 = t * t;
    return 1.0 - t2 / 6.0 + t2 * t2 / 120.0;
  }
  return std::sin(t) / t;
}

GridFunction apply_shift(double s, const GridFunction& u) {
  const Grid& g = u.grid();
  double steps;
  if (near_integer(s / g.dx(), &steps)) {
    const int r = static_cast<int>(steps);
    std::vector<cplx> out(static_cast<std::size_t>(g.N));
    for (int m = 0; m < g.N; ++m) {
      const int src = ((m + r) % g.N + g.N) % g.N;
      out[static_cast<std::size_t>(m)] = u[src];
    }
    return GridFunction(g, std::move(out));
  }
  // band-limited fractional shift: multiply the spectrum by e^{i xi s}
  GridFunction spec = dft_forward(u);
  std::vector<cplx> v = spec.values();
  for (int j = 0; j < g.N; ++j)
    v[static_cast<std::size_t>(j)] *= std::polar(1.0, g.freq(j) * s);
  return dft_inverse(GridFunction(g, std::move(v), Domain::Frequency));
}

GridFunction apply_modulation(double w, const GridFunction& u) {
  const Grid& g = u.grid();
  std::vector<cplx> out(static_cast<std::size_t>(g.N));
  for (int m = 0; m < g.N; ++m)
    out[static_cast<std::size_t>(m)] = std::polar(1.0, w * g.x(m)) * u[m];
  return GridFunction(g, std::move(out));
}

GridFunction apply_M(const PhasePoint& p, const GridFunction& u) {
  GridFunction out = apply_modulation(p.x0, apply_shift(p.xi0, u));
  out *= std::polar(1.0, 0.5 * p.t());
  return out;
}

GridFunction apply_T(const PhasePoint& p, const GridFunction& u) {
  return apply_M({p.xi0, -p.x0}, u);
}

GridFunction apply_R(const PhasePoint& p, const GridFunction& u) {
  const Grid& g = u.grid();
  // u(2 x0 - x) = r(x - 2 x0) with r(y) = u(-y); the index reversal is
  // exact on the periodic lattice.
  std::vector<cplx> rev(static_cast<std::size_t>(g.N));
  for (int m = 0; m < g.N; ++m)
    rev[static_cast<std::size_t>(m)] = u[(g.N - m) % g.N];
  GridFunction out = apply_shift(-2.0 * p.x0, GridFunction(g, std::move(rev)));
  out = apply_modulation(2.0 * p.xi0, out);
  out *= std::polar(1.0, -2.0 * p.xi0 * p.x0);
  return out;
}

GridFunction apply_mult(const GridFunction& f, const GridFunction& u) {
  ensure_same_grid(f, u);
  std::vector<cplx> out(f.values().size());
  for (std::size_t m = 0; m < out.size(); ++m) out[m] = f.values()[m] * u.values()[m];
  return GridFunction(f.grid(), std::move(out));
}

GridFunction apply_fourier_multiplier(const GridFunction& g, const GridFunction& u) {
  ensure_same_grid(g, u);
  GridFunction spec = dft_forward(u);
  std::vector<cplx> v = spec.values();
  for (std::size_t j = 0; j < v.size(); ++j) v[j] *= g.values()[j];
  return dft_inverse(GridFunction(u.grid(), std::move(v), Domain::Frequency));
}

GridFunction apply_fourier_multiplier(const std::function<cplx(double)>& g,
                                      const GridFunction& u) {
  const Grid& gr = u.grid();
  std::vector<cplx> samples(static_cast<std::size_t>(gr.N));
  for (int j = 0; j < gr.N; ++j) samples[static_cast<std::size_t>(j)] = g(gr.freq(j));
  return apply_fourier_multiplier(GridFunction(gr, std::move(samples), Domain::Frequency), u);
}

GridFunction apply_bj_planewave(const PhasePoint& p, const GridFunction& u) {
  GridFunction out = apply_M(p, u);
  out *= cplx{sinc(0.5 * p.t()), 0.0};
  return out;
}

GridFunction apply_tau_planewave(const PhasePoint& p, double tau, const GridFunction& u) {
  GridFunction out = apply_M(p, u);
  out *= std::polar(1.0, 0.5 * (2.0 * tau - 1.0) * p.t());
  return out;
}

GridFunction apply_bj_bandlimited(const std::vector<std::pair<PhasePoint, cplx>>& terms,
                                  const GridFunction& u) {
  for (auto& [p, c] : terms)
    if (!p.commensurate(u.grid())) throw GridError("non-commensurate phase point");
  auto sorted = terms;
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    if (a.first.x0 != b.first.x0) return a.first.x0 < b.first.x0;
    return a.first.xi0 < b.first.xi0;
  });
  GridFunction acc(u.grid());
  for (auto& [p, c] : sorted) {
    GridFunction term = apply_bj_planewave(p, u);
    term *= c;
    acc += term;
  }
  return acc;
}

GridFunction commutator_apply(const GridOp& A, const GridOp& B, const GridFunction& u) {
  return A(B(u)) - B(A(u));
}

void write_csv(const GridFunction& u, const std::string& path) {
  std::FILE* f = std::fopen(path.c_str(), "w");
  if (!f) throw IoError("cannot open " + path + " for writing");
  std::fputs("index,x,re,im\n", f);
  const Grid& g = u.grid();
  for (int m = 0; m < g.N; ++m) {
    const double ax = u.domain() == Domain::Space ? g.x(m) : g.freq(m);
    std::fprintf(f, "%d,%.17g,%.17g,%.17g\n", m, ax, u[m].real(), u[m].imag());
  }
  std::fclose(f);
}

GridFunction read_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  std::string line;
  if (!std::getline(in, line)) throw IoError("empty csv: " + path);
  std::vector<double> xs, re, im;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    int idx;
    double x, r, i;
    if (std::sscanf(line.c_str(), "%d,%lg,%lg,%lg", &idx, &x, &r, &i) != 4)
      throw IoError("malformed csv row: " + line);
    xs.push_back(x);
    re.push_back(r);
    im.push_back(i);
  }
  if (xs.size() < 2) throw IoError("too few csv rows in " + path);
  const int N = static_cast<int>(xs.size());
  const double L = N * (xs[1] - xs[0]);
  Grid g(N, L);
  std::vector<cplx> v(xs.size());
  for (std::size_t m = 0; m < v.size(); ++m) v[m] = cplx{re[m], im[m]};
  return GridFunction(g, std::move(v));
}

}  // namespace bjop
