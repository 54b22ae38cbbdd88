#pragma once

#include <complex>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace bjop {

using cplx = std::complex<double>;

/// Periodic 1-D sampling grid: N points x_m = -L/2 + m L/N and the native
/// DFT frequency lattice xi_k = 2 pi k / L, k = -N/2 .. N/2-1.
struct Grid {
  int N = 0;
  double L = 0;

  Grid(int n, double length);

  double dx() const { return L / N; }
  double dxi() const { return 2 * pi() / L; }
  double x(int m) const { return -L / 2 + m * dx(); }
  /// frequency at storage slot j (frequencies are stored in increasing
  /// order, k = j - N/2)
  double freq(int j) const { return dxi() * (j - N / 2); }
  int freq_slot(int k) const { return k + N / 2; }

  friend bool operator==(const Grid& a, const Grid& b) { return a.N == b.N && a.L == b.L; }

  static double pi();
};

enum class Domain { Space, Frequency };

/// Immutable-by-convention complex samples on a Grid.  The discrete L2
/// norm uses the grid measure (dx in space, dxi in frequency), which makes
/// the DFT below exactly unitary.
class GridFunction {
 public:
  explicit GridFunction(const Grid& g, Domain d = Domain::Space);
  GridFunction(const Grid& g, std::vector<cplx> values, Domain d = Domain::Space);

  static GridFunction sample(const Grid& g, const std::function<cplx(double)>& f);
  /// e^{-x^2/2}
  static GridFunction gaussian(const Grid& g);
  /// x e^{-x^2/2}
  static GridFunction hermite1(const Grid& g);
  /// e^{i xi_k x}
  static GridFunction planewave(const Grid& g, int k);

  const Grid& grid() const { return grid_; }
  Domain domain() const { return domain_; }
  const std::vector<cplx>& values() const { return v_; }
  cplx operator[](int m) const { return v_[static_cast<std::size_t>(m)]; }
  int size() const { return grid_.N; }

  double norm() const;

  GridFunction& operator+=(const GridFunction& o);
  GridFunction& operator-=(const GridFunction& o);
  GridFunction& operator*=(cplx s);
  friend GridFunction operator+(GridFunction a, const GridFunction& b) { return a += b; }
  friend GridFunction operator-(GridFunction a, const GridFunction& b) { return a -= b; }
  friend GridFunction operator*(cplx s, GridFunction a) { return a *= s; }

 private:
  Grid grid_;
  Domain domain_;
  std::vector<cplx> v_;
};

/// (u|v) = w sum_m u_m conj(v_m) with the grid measure w
cplx inner(const GridFunction& u, const GridFunction& v);

/// Unitary discrete Fourier transform matching
///     Fu(xi) = (2 pi)^(-1/2) integral e^{-i xi x} u(x) dx,
/// i.e. forward scale L/(N sqrt(2 pi)) on the raw DFT.  Output carries the
/// Frequency domain tag with samples in increasing-frequency order.
GridFunction dft_forward(const GridFunction& u);
GridFunction dft_inverse(const GridFunction& spec);

/// The pair (x0, xi0): x0 is a modulation frequency and xi0 a shift
/// amount.  Commensurate points (x0 on the dual lattice, xi0 on the
/// sample lattice) make every operator below alias-free and exact.
struct PhasePoint {
  double x0 = 0;
  double xi0 = 0;

  double t() const { return x0 * xi0; }
  PhasePoint operator-() const { return {-x0, -xi0}; }
  PhasePoint operator+(const PhasePoint& o) const { return {x0 + o.x0, xi0 + o.xi0}; }
  bool commensurate(const Grid& g) const;
};

/// sin(t)/t with the removable singularity filled in (series for tiny t).
double sinc(double t);

/// u(x + s): circular reindex when s is a lattice multiple, otherwise a
/// frequency-domain phase ramp (exact for band-limited data).
GridFunction apply_shift(double s, const GridFunction& u);
/// e^{i w x} u(x)
GridFunction apply_modulation(double w, const GridFunction& u);

/// M(x0,xi0) u = e^{i(x0 x + x0 xi0/2)} u(x + xi0); unitary.
GridFunction apply_M(const PhasePoint& p, const GridFunction& u);
/// Heisenberg operator T(x0,xi0) = M(xi0, -x0).
GridFunction apply_T(const PhasePoint& p, const GridFunction& u);
/// Grossmann-Royer reflection R(x0,xi0) u = e^{2i xi0 (x-x0)} u(2x0 - x).
GridFunction apply_R(const PhasePoint& p, const GridFunction& u);

GridFunction apply_mult(const GridFunction& f, const GridFunction& u);
GridFunction apply_fourier_multiplier(const GridFunction& g, const GridFunction& u);
GridFunction apply_fourier_multiplier(const std::function<cplx(double)>& g,
                                      const GridFunction& u);

/// sinc(x0 xi0 / 2) M(x0,xi0) u: the plane-wave Born-Jordan operator.
GridFunction apply_bj_planewave(const PhasePoint& p, const GridFunction& u);
/// e^{(i/2)(2 tau - 1) x0 xi0} M(x0,xi0) u: the plane-wave Shubin
/// tau-operator; its [0,1] average in tau reproduces the sinc weight.
GridFunction apply_tau_planewave(const PhasePoint& p, double tau, const GridFunction& u);

/// Born-Jordan operator of the trigonometric symbol
///     a(x,xi) = sum_p c(p) e^{i(p.x0 x + p.xi0 xi)};
/// terms are summed in a fixed deterministic order.  All points must be
/// commensurate.
GridFunction apply_bj_bandlimited(const std::vector<std::pair<PhasePoint, cplx>>& terms,
                                  const GridFunction& u);

using GridOp = std::function<GridFunction(const GridFunction&)>;

/// A(Bu) - B(Au)
GridFunction commutator_apply(const GridOp& A, const GridOp& B, const GridFunction& u);

// --- file formats ------------------------------------------------------

/// CSV columns: index, x, re, im (17 significant digits).
void write_csv(const GridFunction& u, const std::string& path);
GridFunction read_csv(const std::string& path);

/// JSON object {"grid": {"N":..., "L":...}, "domain": ..., "re": [...], "im": [...]}.
void write_json(const GridFunction& u, const std::string& path);
GridFunction read_json(const std::string& path);

}  // namespace bjop
