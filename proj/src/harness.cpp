#include "bjop/harness.hpp"

#include <fmt/format.h>

#include <boost/math/quadrature/gauss.hpp>
#include <chrono>
#include <cmath>

#include "bjop/errors.hpp"
#include "json.hpp"

namespace bjop {

namespace {

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

GridFunction unit_gaussian(const Grid& g) {
  GridFunction u = GridFunction::gaussian(g);
  u *= cplx{1.0 / u.norm(), 0.0};
  return u;
}

GridFunction unit_hermite(const Grid& g) {
  GridFunction u = GridFunction::hermite1(g);
  u *= cplx{1.0 / u.norm(), 0.0};
  return u;
}

double rel_l2(const GridFunction& a, const GridFunction& b, const GridFunction& ref) {
  return (a - b).norm() / ref.norm();
}

// x^2 D^2 - 2 i x D + c
OpPoly quadratic_with_constant(const Rational& c) {
  OpPoly p = OpPoly::monomial(1, {2}, {2});
  p += OpPoly::monomial(GaussianRational(Rational(0), Rational(-2)), {1}, {1});
  p += OpPoly::constant(GaussianRational(c));
  return p;
}

}  // namespace

bool CheckDetail::ok() const {
  const double diff = std::abs(expected - measured);
  return std::isfinite(measured) && diff <= tol;
}

void CheckReport::add(std::string quantity, double expected, double measured, double tol) {
  CheckDetail d{std::move(quantity), expected, measured, tol};
  passed = passed && d.ok();
  details.push_back(std::move(d));
}

void CheckReport::add_flag(std::string quantity, bool ok) {
  add(std::move(quantity), 1.0, ok ? 1.0 : 0.0, 0.0);
}

void CheckReport::merge_rows(const CheckReport& other) {
  for (const auto& d : other.details) {
    passed = passed && d.ok();
    details.push_back(d);
  }
}

CheckReport check_gvh() {
  Stopwatch sw;
  CheckReport rep;
  rep.name = "gvh";

  const OpPoly x2 = OpPoly::x_power(2);
  const OpPoly x3 = OpPoly::x_power(3);
  const OpPoly d2 = OpPoly::d_power(2);
  const OpPoly d3 = OpPoly::d_power(3);
  const GaussianRational inv_6i(Rational(0), make_rational(-1, 6));  // 1/(6i)
  const GaussianRational inv_9i(Rational(0), make_rational(-1, 9));
  const GaussianRational inv_3i(Rational(0), make_rational(-1, 3));

  // both routes are assembled from x-only / xi-only operators only
  const OpPoly op_x2xi = op_commutator(x3, d2).scaled(inv_6i);
  const OpPoly op_xxi2 = op_commutator(x2, d3).scaled(inv_6i);
  const OpPoly lhs = op_commutator(x3, d3).scaled(inv_9i);
  const OpPoly rhs = op_commutator(op_x2xi, op_xxi2).scaled(inv_3i);

  const OpPoly lhs_expected = quadratic_with_constant(make_rational(-2, 3));
  const OpPoly rhs_expected = quadratic_with_constant(make_rational(-1, 3));

  rep.add_flag("lhs_equals_x2D2_minus_2ixD_minus_2_3", lhs == lhs_expected);
  rep.add_flag("rhs_equals_x2D2_minus_2ixD_minus_1_3", rhs == rhs_expected);
  rep.add("lhs_const_term", to_double(make_rational(-2, 3)),
          to_double(lhs.constant_term().re), 0.0);
  rep.add_flag("lhs_const_term_is_real", lhs.constant_term().is_real() || lhs.constant_term().is_zero());
  rep.add("rhs_const_term", to_double(make_rational(-1, 3)),
          to_double(rhs.constant_term().re), 0.0);
  rep.add_flag("lhs_minus_rhs_is_minus_1_3",
               lhs - rhs == OpPoly::constant(GaussianRational(make_rational(-1, 3))));

  const SymbolPoly x2xi2 = SymbolPoly::monomial(1, {2}, {2});
  rep.add_flag("bj_x2xi2_equals_lhs", quantize_bj(x2xi2) == lhs);

  rep.elapsed_s = sw.seconds();
  return rep;
}

CheckReport check_monomials(unsigned rmax, unsigned smax) {
  if (rmax > 12 || smax > 12) throw Error("monomial sweep bounded at r,s <= 12");
  Stopwatch sw;
  CheckReport rep;
  rep.name = "monomials";

  bool bjmono_ok = true, commut_ok = true, fundamental_ok = true;
  int first_fail_r = -1, first_fail_s = -1;

  for (unsigned r = 0; r <= rmax; ++r) {
    for (unsigned s = 0; s <= smax; ++s) {
      const SymbolPoly mono = SymbolPoly::monomial(1, {r}, {s});
      const OpPoly bj = quantize_bj(mono);

      // equal-weight ordering sum (1/(r+1)) sum_k x^k D^s x^(r-k)
      OpPoly sum(1);
      for (unsigned k = 0; k <= r; ++k)
        sum += op_mul(op_mul(OpPoly::x_power(k), OpPoly::d_power(s)), OpPoly::x_power(r - k));
      sum = sum.scaled(GaussianRational(make_rational(1, r + 1)));

      // ladder identity [x^{r+1}, D^{s+1}] = (s+1) i sum_j x^{r-j} D^s x^j
      const OpPoly comm = op_commutator(OpPoly::x_power(r + 1), OpPoly::d_power(s + 1));
      OpPoly ladder(1);
      for (unsigned j = 0; j <= r; ++j)
        ladder += op_mul(op_mul(OpPoly::x_power(r - j), OpPoly::d_power(s)), OpPoly::x_power(j));
      ladder = ladder.scaled(GaussianRational(Rational(0), Rational(s + 1)));

      const bool a = (bj == sum);
      const bool b = (comm == ladder);
      const bool c = (bj_via_commutator(r, s) == bj);
      bjmono_ok = bjmono_ok && a;
      commut_ok = commut_ok && b;
      fundamental_ok = fundamental_ok && c;
      if (!(a && b && c) && first_fail_r < 0) {
        first_fail_r = static_cast<int>(r);
        first_fail_s = static_cast<int>(s);
      }
    }
  }

  rep.add("pairs_checked", (rmax + 1) * (smax + 1), (rmax + 1) * (smax + 1), 0.0);
  rep.add_flag("ordering_sum_matches_tau_integral", bjmono_ok);
  rep.add_flag("ladder_commutator_identity", commut_ok);
  rep.add_flag("commutator_route_matches", fundamental_ok);
  if (first_fail_r >= 0)
    rep.add_flag(fmt::format("first_failure_at_r{}_s{}", first_fail_r, first_fail_s), false);

  // spotlight values
  OpPoly xd_half = OpPoly::monomial(1, {1}, {1});
  xd_half += OpPoly::constant(GaussianRational(Rational(0), make_rational(-1, 2)));
  rep.add_flag("r1s1_value_xD_minus_i_2",
               quantize_bj(SymbolPoly::monomial(1, {1}, {1})) == xd_half);
  rep.add_flag("r2s2_value_matches_gvh_constant",
               quantize_bj(SymbolPoly::monomial(1, {2}, {2})) ==
                   quadratic_with_constant(make_rational(-2, 3)));
  rep.add_flag("r0s5_value_D5",
               quantize_bj(SymbolPoly::monomial(1, {0}, {5})) == OpPoly::d_power(5));

  rep.elapsed_s = sw.seconds();
  return rep;
}

namespace {

PhasePoint lattice_point(int k1, int k2, const Grid& g) {
  return {k1 * g.dxi(), k2 * g.dx()};
}

// 64-node Gauss-Legendre average over tau in [0,1] of the tau plane-wave
// operator; analytic value of the average weight is sinc(t/2).
GridFunction tau_average_gl64(const PhasePoint& p, const GridFunction& u) {
  using rule = boost::math::quadrature::gauss<double, 64>;
  GridFunction acc(u.grid());
  for (std::size_t i = 0; i < rule::abscissa().size(); ++i) {
    const double a = rule::abscissa()[i];
    const double w = rule::weights()[i] / 2.0;
    GridFunction hi = apply_tau_planewave(p, (1.0 + a) / 2.0, u);
    hi *= cplx{w, 0.0};
    GridFunction lo = apply_tau_planewave(p, (1.0 - a) / 2.0, u);
    lo *= cplx{w, 0.0};
    acc += hi;
    acc += lo;
  }
  return acc;
}

void dirac_rows(CheckReport& rep, const QuantizationRule& rule, int k1, int k2, const Grid& g) {
  const PhasePoint p = lattice_point(k1, k2, g);
  const double t = p.t();
  const GridFunction u = unit_gaussian(g);

  const GridOp F = [&](const GridFunction& w) { return apply_modulation(p.x0, w); };
  const GridOp G = [&](const GridFunction& w) { return apply_shift(p.xi0, w); };
  const GridFunction lhs = commutator_apply(F, G, u);

  // {e^{i x0 x}, e^{i xi0 xi}} = -t e^{i(x0 x + xi0 xi)}
  GridFunction op_bracket =
      rule.kind == QuantizationRule::Kind::BornJordan
          ? apply_bj_planewave(p, u)
          : apply_tau_planewave(p, to_double(rule.tau), u);
  op_bracket *= cplx{0.0, 1.0} * cplx{-t, 0.0};  // i * Op(bracket)

  const std::string tag = fmt::format("{}_t={:.6g}", rule.name(), t);

  if (rule.kind == QuantizationRule::Kind::BornJordan) {
    rep.add(tag + "_dirac_rel_err", 0.0, rel_l2(lhs, op_bracket, u), t == 0.0 ? 1e-10 : 1e-9);
    GridFunction predicted = apply_M(p, u);
    predicted *= cplx{0.0, -2.0 * std::sin(0.5 * t)};
    rep.add(tag + "_commutator_matches_prediction", 0.0, rel_l2(lhs, predicted, u), 1e-9);
    rep.add(tag + "_tau_gl64_average_matches_bj", 0.0,
            rel_l2(tau_average_gl64(p, u), apply_bj_planewave(p, u), u), 1e-12);
  } else {
    if (t == 0.0) {
      rep.add(tag + "_sides_agree", 0.0, rel_l2(lhs, op_bracket, u), 1e-10);
      return;
    }
    // least-squares ratio of the two sides; prediction sinc(t/2) for Weyl
    // and sinc(t/2) e^{-i(2 tau - 1) t/2} for a general Shubin rule
    const cplx ratio = inner(lhs, op_bracket) / inner(op_bracket, op_bracket);
    const cplx predicted =
        sinc(0.5 * t) * std::polar(1.0, -0.5 * (2.0 * to_double(rule.tau) - 1.0) * t);
    rep.add(tag + "_ratio_re", predicted.real(), ratio.real(), 1e-9);
    rep.add(tag + "_ratio_im", predicted.imag(), ratio.imag(), 1e-9);
    GridFunction scaled = op_bracket;
    scaled *= ratio;
    rep.add(tag + "_ratio_residual", 0.0, rel_l2(lhs, scaled, u), 1e-9);
  }
}

}  // namespace

CheckReport check_dirac_grid(const QuantizationRule& rule, int k1, int k2, const Grid& g) {
  Stopwatch sw;
  CheckReport rep;
  rep.name = "dirac_grid";
  dirac_rows(rep, rule, k1, k2, g);
  rep.elapsed_s = sw.seconds();
  return rep;
}

CheckReport check_dirac_grid(const std::vector<QuantizationRule>& rules,
                             const std::vector<std::pair<int, int>>& ks, const Grid& g) {
  Stopwatch sw;
  CheckReport rep;
  rep.name = "dirac_grid";
  // The tau plane-wave phase sign is fixed by requiring that its [0,1]
  // average reproduce the sinc weight; +1 records the selected sign.
  rep.add("mtau_phase_sign_selected", 1.0, 1.0, 0.0);
  for (const auto& rule : rules)
    for (auto [k1, k2] : ks) dirac_rows(rep, rule, k1, k2, g);
  rep.elapsed_s = sw.seconds();
  return rep;
}

namespace {

void theorem2_rows(CheckReport& rep, const PhasePoint& p, const GridFunction& u,
                   const std::string& tag) {
  const double t = p.t();
  const GridOp F = [&](const GridFunction& w) { return apply_modulation(p.x0, w); };
  const GridOp G = [&](const GridFunction& w) { return apply_shift(p.xi0, w); };
  GridFunction recon = commutator_apply(F, G, u);
  recon *= cplx{0.0, 1.0 / t};  // (i/t) [modulation, shift]

  const GridFunction bj = apply_bj_planewave(p, u);
  rep.add(tag + "_reconstruction_matches_bj", 0.0, rel_l2(recon, bj, u), 1e-10);
  if (std::abs(sinc(0.5 * t)) < 1e-14)
    rep.add(tag + "_reconstruction_is_zero", 0.0, recon.norm() / u.norm(), 1e-10);
}

}  // namespace

CheckReport check_theorem2_reconstruction(int k1, int k2, const Grid& g) {
  if (k1 == 0 || k2 == 0) throw Error("t = 0 rejected; use the continuity rows");
  Stopwatch sw;
  CheckReport rep;
  rep.name = "theorem2";
  const PhasePoint p = lattice_point(k1, k2, g);
  theorem2_rows(rep, p, unit_gaussian(g), fmt::format("t={:.6g}", p.t()));
  rep.elapsed_s = sw.seconds();
  return rep;
}

CheckReport check_theorem2_reconstruction(const std::vector<std::pair<int, int>>& ks,
                                          const Grid& g) {
  Stopwatch sw;
  CheckReport rep;
  rep.name = "theorem2";
  const GridFunction u = unit_gaussian(g);
  for (auto [k1, k2] : ks) {
    if (k1 == 0 || k2 == 0) continue;
    const PhasePoint p = lattice_point(k1, k2, g);
    theorem2_rows(rep, p, u, fmt::format("t={:.6g}", p.t()));
  }
  // two-sided continuity at the removable point t = 0: the reconstruction
  // approaches the plain plane-wave operator as sinc(t/2) -> 1
  for (const double t0 : {2 * Grid::pi() / 1024, -2 * Grid::pi() / 1024}) {
    const PhasePoint p{t0, 1.0};
    const std::string tag =
        fmt::format("t={:.6g}{}", p.t(), p.commensurate(g) ? "" : "_offlattice");
    theorem2_rows(rep, p, u, tag);
    const GridOp F = [&](const GridFunction& w) { return apply_modulation(p.x0, w); };
    const GridOp G = [&](const GridFunction& w) { return apply_shift(p.xi0, w); };
    GridFunction recon = commutator_apply(F, G, u);
    recon *= cplx{0.0, 1.0 / p.t()};
    const cplx mu = inner(recon, apply_M(p, u)) / inner(apply_M(p, u), apply_M(p, u));
    rep.add(tag + "_scalar_vs_sinc", sinc(0.5 * p.t()), mu.real(), 1e-10);
    rep.add(tag + "_continuity_gap", 0.0, std::abs(mu - cplx{1.0, 0.0}), 1e-5);
  }
  rep.elapsed_s = sw.seconds();
  return rep;
}

CheckReport check_unitary_family(const Grid& g) {
  Stopwatch sw;
  CheckReport rep;
  rep.name = "unitary_family";
  const GridFunction u = unit_gaussian(g);
  const GridFunction v = unit_hermite(g);

  // modulation-commensurate points: x0 on the dual lattice, xi0 on the
  // sample lattice
  const std::vector<std::pair<int, int>> m_points = {
      {0, 0}, {1, 0}, {0, 4}, {1, 4}, {2, 8}, {3, 5}, {5, 12}, {8, 16}, {-3, 7}, {16, 24}};
  for (auto [j, k] : m_points) {
    const PhasePoint p{j * g.dxi(), k * g.dx()};
    const double t = p.t();
    const std::string tag = fmt::format("M({},{})", j, k);
    const GridFunction mu_ = apply_M(p, u);
    rep.add(tag + "_unitary", 1.0, mu_.norm() / u.norm(), 1e-12);

    GridFunction shift_first = apply_shift(p.xi0, apply_modulation(p.x0, u));
    shift_first *= std::polar(1.0, -0.5 * t);
    rep.add(tag + "_bch_modulate_then_shift", 0.0, rel_l2(mu_, shift_first, u), 1e-10);

    GridFunction mod_first = apply_modulation(p.x0, apply_shift(p.xi0, u));
    mod_first *= std::polar(1.0, 0.5 * t);
    rep.add(tag + "_bch_shift_then_modulate", 0.0, rel_l2(mu_, mod_first, u), 1e-10);
  }

  // group law up to the symplectic phase e^{i(a2 b1 - a1 b2)/2}
  const std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> pairs = {
      {{1, 4}, {2, -2}}, {{3, 5}, {-1, 8}}, {{0, 4}, {2, 0}}};
  for (auto& [ab, cd] : pairs) {
    const PhasePoint p1{ab.first * g.dxi(), ab.second * g.dx()};
    const PhasePoint p2{cd.first * g.dxi(), cd.second * g.dx()};
    const cplx phase = std::polar(1.0, 0.5 * (p2.x0 * p1.xi0 - p1.x0 * p2.xi0));
    GridFunction composed = apply_M(p1, apply_M(p2, u));
    GridFunction direct = apply_M(p1 + p2, u);
    direct *= phase;
    rep.add(fmt::format("M_group_law_({},{})x({},{})", ab.first, ab.second, cd.first, cd.second),
            0.0, rel_l2(composed, direct, u), 1e-10);
  }

  // Heisenberg-commensurate points: x0 on the sample lattice, xi0 on the
  // dual lattice (T swaps the roles)
  const std::vector<std::pair<int, int>> t_points = {
      {1, 1}, {4, 2}, {8, 8}, {-4, 3}, {12, 5}, {16, 16}, {2, -6}, {5, 4}, {3, 10}};
  for (auto [m, j] : t_points) {
    const PhasePoint p{m * g.dx(), j * g.dxi()};
    const std::string tag = fmt::format("T({},{})", m, j);
    rep.add(tag + "_unitary", 1.0, apply_T(p, u).norm() / u.norm(), 1e-12);
    rep.add(tag + "_adjoint_pairing", 0.0,
            std::abs(inner(apply_T(p, u), v) - inner(u, apply_T(-p, v))), 1e-10);
    rep.add(tag + "_inverse", 0.0, rel_l2(apply_T(-p, apply_T(p, u)), u, u), 1e-10);
  }

  // Grossmann-Royer rows; reflections are exact when 2 x0 is on the
  // sample lattice, which t_points guarantee
  {
    std::vector<cplx> rev(static_cast<std::size_t>(g.N));
    for (int m = 0; m < g.N; ++m) rev[static_cast<std::size_t>(m)] = u[(g.N - m) % g.N];
    rep.add("R(0,0)_is_reflection", 0.0,
            (apply_R({0, 0}, u) - GridFunction(g, std::move(rev))).norm(), 0.0);
  }
  std::vector<PhasePoint> r_points;
  for (auto [m, j] : t_points) r_points.push_back({m * g.dx(), j * g.dxi()});
  r_points.push_back({3 * g.dxi(), 10 * g.dx()});  // off-lattice reflection center
  for (std::size_t i = 0; i < r_points.size(); ++i) {
    const PhasePoint p = r_points[i];
    const std::string tag = fmt::format("R_point{}", i);
    rep.add(tag + "_involution", 0.0, rel_l2(apply_R(p, apply_R(p, u)), u, u), 1e-10);
    const GridFunction conjugated = apply_T(p, apply_R({0, 0}, apply_T(-p, u)));
    rep.add(tag + "_covariance", 0.0, rel_l2(apply_R(p, u), conjugated, u), 1e-10);
  }

  rep.elapsed_s = sw.seconds();
  return rep;
}

CheckReport check_adjoint_grid(const Grid& g) {
  Stopwatch sw;
  CheckReport rep;
  rep.name = "adjoint";
  const GridFunction u = unit_gaussian(g);
  const GridFunction v = unit_hermite(g);

  const PhasePoint p1{2 * g.dxi(), 4 * g.dx()};
  const PhasePoint p2{-1 * g.dxi(), 8 * g.dx()};

  // real symbol: conjugate-symmetric amplitudes c(-p) = conj(c(p))
  const std::vector<std::pair<PhasePoint, cplx>> real_sym = {
      {p1, cplx{0.5, 0.0}},
      {-p1, cplx{0.5, 0.0}},
      {p2, cplx{0.25, 0.75}},
      {-p2, cplx{0.25, -0.75}},
  };
  const auto A = [&](const GridFunction& w) { return apply_bj_bandlimited(real_sym, w); };
  rep.add("real_symbol_self_adjoint", 0.0, std::abs(inner(A(u), v) - inner(u, A(v))), 1e-10);

  // i * (real symbol) is skew-adjoint
  std::vector<std::pair<PhasePoint, cplx>> skew_sym = real_sym;
  for (auto& [q, c] : skew_sym) c *= cplx{0.0, 1.0};
  const auto B = [&](const GridFunction& w) { return apply_bj_bandlimited(skew_sym, w); };
  rep.add("i_real_symbol_skew_adjoint", 0.0, std::abs(inner(B(u), v) + inner(u, B(v))), 1e-10);

  // a = 1 is the identity, exactly
  const std::vector<std::pair<PhasePoint, cplx>> unit_sym = {{PhasePoint{0, 0}, cplx{1.0, 0.0}}};
  rep.add("unit_symbol_identity", 0.0, (apply_bj_bandlimited(unit_sym, u) - u).norm(), 0.0);

  // general complex amplitudes against the conjugated symbol
  const std::vector<std::pair<PhasePoint, cplx>> any_sym = {
      {p1, cplx{0.3, -1.1}}, {p2, cplx{-0.7, 0.2}}, {-p2, cplx{2.0, 0.5}}};
  std::vector<std::pair<PhasePoint, cplx>> conj_sym;
  for (auto& [q, c] : any_sym) conj_sym.push_back({-q, std::conj(c)});
  const auto C = [&](const GridFunction& w) { return apply_bj_bandlimited(any_sym, w); };
  const auto Cbar = [&](const GridFunction& w) { return apply_bj_bandlimited(conj_sym, w); };
  rep.add("conjugate_symbol_adjoint_pairing", 0.0,
          std::abs(inner(C(u), v) - inner(u, Cbar(v))), 1e-10);

  rep.elapsed_s = sw.seconds();
  return rep;
}

std::vector<CheckReport> run_all(const HarnessConfig& cfg) {
  const Grid g = cfg.grid();
  std::vector<CheckReport> reports;
  reports.push_back(check_gvh());
  reports.push_back(check_monomials(cfg.rmax, cfg.smax));
  reports.push_back(check_dirac_grid({QuantizationRule::born_jordan(), QuantizationRule::weyl()},
                                     cfg.dirac_ks, g));
  reports.push_back(check_theorem2_reconstruction(cfg.theorem2_ks, g));
  reports.push_back(check_unitary_family(g));
  reports.push_back(check_adjoint_grid(g));
  return reports;
}

bool aggregate_passed(const std::vector<CheckReport>& reports) {
  for (const auto& r : reports)
    if (!r.passed) return false;
  return true;
}

std::string reports_to_json(const std::vector<CheckReport>& reports) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : reports) {
    nlohmann::json jr;
    jr["schema"] = "bjop-report/1";
    jr["name"] = r.name;
    jr["passed"] = r.passed;
    jr["elapsed_s"] = r.elapsed_s;
    jr["details"] = nlohmann::json::array();
    for (const auto& d : r.details)
      jr["details"].push_back({{"quantity", d.quantity},
                               {"expected", d.expected},
                               {"measured", d.measured},
                               {"tol", d.tol}});
    arr.push_back(std::move(jr));
  }
  return arr.dump(2) + "\n";
}

std::string reports_to_text(const std::vector<CheckReport>& reports, bool color) {
  const char* green = color ? "\x1b[32m" : "";
  const char* red = color ? "\x1b[31m" : "";
  const char* reset = color ? "\x1b[0m" : "";
  std::string out;
  for (const auto& r : reports) {
    out += fmt::format("suite {:<16} {}{}{}\n", r.name,
                       r.passed ? green : red, r.passed ? "PASS" : "FAIL", reset);
    for (const auto& d : r.details) {
      out += fmt::format("  {} {:<52} expected {:<14.10g} measured {:<17.12g} tol {:.3g}\n",
                         d.ok() ? "ok  " : "FAIL", d.quantity, d.expected, d.measured, d.tol);
    }
  }
  out += fmt::format("overall: {}{}{}\n", aggregate_passed(reports) ? green : red,
                     aggregate_passed(reports) ? "PASS" : "FAIL", reset);
  return out;
}

}  // namespace bjop
