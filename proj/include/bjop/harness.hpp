#pragma once

#include <string>
#include <utility>
#include <vector>

#include "bjop/grid.hpp"
#include "bjop/quantize.hpp"

namespace bjop {

struct CheckDetail {
  std::string quantity;
  double expected = 0;
  double measured = 0;
  double tol = 0;  // 0 means the row must match exactly

  bool ok() const;
};

/// Structured pass/fail record of one verification scenario.  passed is
/// true iff every detail row satisfies |expected - measured| <= tol.
struct CheckReport {
  std::string name;
  bool passed = true;
  double elapsed_s = 0;
  std::vector<CheckDetail> details;

  void add(std::string quantity, double expected, double measured, double tol);
  void add_flag(std::string quantity, bool ok);
  void merge_rows(const CheckReport& other);
};

struct HarnessConfig {
  unsigned rmax = 8;
  unsigned smax = 8;
  int grid_n = 256;
  double grid_l = 16 * Grid::pi();
  /// (k1, k2) lattice indices: x0 = k1 * 2 pi / L, xi0 = k2 * L / N,
  /// so t = x0 xi0 = 2 pi k1 k2 / N.
  std::vector<std::pair<int, int>> dirac_ks = {{0, 8}, {8, 8}, {8, 16}, {16, 16}, {16, 24}};
  std::vector<std::pair<int, int>> theorem2_ks = {{8, 8}, {8, 16}, {16, 16}, {16, 24}};
  QuantizationRule rule = QuantizationRule::born_jordan();

  Grid grid() const { return Grid(grid_n, grid_l); }
};

/// The degree-3 obstruction, reproduced exactly from x-only and xi-only
/// quantizations plus commutators: the two bracket routes to x^2 xi^2
/// disagree by the constant 1/3, and the Born-Jordan operator matches the
/// first route.
CheckReport check_gvh();

/// For all r <= rmax, s <= smax: the equal-weight ordering sum, the
/// tau-integrated definition and the commutator route produce the same
/// operator, and the ladder commutator identity holds.  All exact.
CheckReport check_monomials(unsigned rmax, unsigned smax);

/// Dirac correspondence on plane waves at one lattice point.  Born-Jordan
/// must satisfy [F,G]u = i Op({a,b})u to 1e-9 relative; for other rules
/// the measured ratio of the two sides must equal its predicted value.
CheckReport check_dirac_grid(const QuantizationRule& rule, int k1, int k2, const Grid& g);
CheckReport check_dirac_grid(const std::vector<QuantizationRule>& rules,
                             const std::vector<std::pair<int, int>>& ks, const Grid& g);

/// Constructive reconstruction of the plane-wave operator from a
/// commutator of a modulation and a shift; rejects t = 0.
CheckReport check_theorem2_reconstruction(int k1, int k2, const Grid& g);
/// Battery over lattice points plus the small-|t| continuity rows.
CheckReport check_theorem2_reconstruction(const std::vector<std::pair<int, int>>& ks,
                                          const Grid& g);

/// Weyl-family operator identities: both BCH factorizations, the group
/// law up to phase, the T adjoint/inverse relations, Grossmann-Royer
/// covariance and involution.
CheckReport check_unitary_family(const Grid& g);

/// (Op(a)u | v) = (u | Op(conj a)v) for trigonometric symbols; real
/// symbols give self-adjoint operators.
CheckReport check_adjoint_grid(const Grid& g);

/// Every check, deterministic order.  The Dirac check runs both the
/// Born-Jordan rows and the Weyl mismatch-ratio rows regardless of
/// config.rule, so the full claim set is always exercised.
std::vector<CheckReport> run_all(const HarnessConfig& cfg);

bool aggregate_passed(const std::vector<CheckReport>& reports);

/// Schema "bjop-report/1": [{schema, name, passed, elapsed_s,
/// details:[{quantity, expected, measured, tol}]}, ...]
std::string reports_to_json(const std::vector<CheckReport>& reports);
std::string reports_to_text(const std::vector<CheckReport>& reports, bool color);

}  // namespace bjop
