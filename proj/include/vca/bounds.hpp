// bounds.hpp — exact lower bounds, LP certificates, and ratio curves.
//
// Every quantity in this module is an exact rational; floating point is never
// used. The linear program that underlies the per-instance lower bound is
// never solved numerically: closed-form primal and dual assignments are
// constructed and verified against the constraint matrix, which is both
// stronger and simpler than running a solver. All constants flow from one
// scalar budget function (ell_budget) evaluated at a handful of fixed
// argument triples.
#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "circle.hpp"
#include "errors.hpp"
#include "feasibility.hpp"
#include "instance.hpp"
#include "local_search.hpp"
#include "rational.hpp"

namespace vca {

// Endpoint-class pair of a link: each endpoint is internal-covered (a),
// border-covered (b), matched (c), or unclassified (d); see
// classify_vertices. Pairs are unordered, so ten classes suffice.
enum class PairClass : int { aa, ab, ac, ad, bb, bc, bd, cc, cd, dd };

// Interaction kind of a link with a solution F: M = connects two circle
// components of F, P = crosses a border chord of F, MP = both, R = neither.
enum class LinkKind : int { M, P, MP, R };

inline const char* to_string(PairClass p) {
  static constexpr const char* names[] = {"aa", "ab", "ac", "ad", "bb",
                                          "bc", "bd", "cc", "cd", "dd"};
  return names[static_cast<int>(p)];
}

inline const char* to_string(LinkKind k) {
  static constexpr const char* names[] = {"M", "P", "MP", "R"};
  return names[static_cast<int>(k)];
}

// Per-(pair-class, kind) connection budgets: how many component merges a
// single link of that cell can contribute. A disengaged cell means links of
// that cell cannot exist next to a critical solution at all.
struct EllTable {
  Rational alpha;
  // Rows indexed by PairClass, columns by LinkKind. Disengaged cells hold
  // nullopt; all others hold the exact budget.
  std::array<std::array<std::optional<Int>, 4>, 10> cells{};

  const std::optional<Int>& at(PairClass p, LinkKind k) const {
    return cells[static_cast<std::size_t>(p)][static_cast<std::size_t>(k)];
  }
  std::optional<Int>& at(PairClass p, LinkKind k) {
    return cells[static_cast<std::size_t>(p)][static_cast<std::size_t>(k)];
  }
  bool forbidden(PairClass p, LinkKind k) const { return !at(p, k); }
};

// Budget for one link given the three indicators that drive it: X = 1 if the
// link crosses a border chord of F, V_M / V_F = how many of its endpoints are
// matched / covered by F. Value: max{0, ceil((5-2X-V_F-(4-V_M-V_F)a) /
// (2a-1))}. Grows without bound as a -> 1/2, hence returns Int.
inline Int ell_budget(int x, int v_m, int v_f, const Rational& alpha) {
  check_alpha(alpha);
  if (x < 0 || x > 1 || v_m < 0 || v_m > 2 || v_f < 0 || v_f > 2 ||
      v_m + v_f > 2)
    throw FormatError("ell_budget: indicator out of range (X in {0,1}, "
                      "V_M + V_F <= 2)");
  const Rational numerator =
      Rational(5 - 2 * x - v_f) - Rational(4 - v_m - v_f) * alpha;
  const Rational denominator = Rational(2) * alpha - 1;
  Int value = ceil_rat(numerator / denominator);
  if (value < 0) value = 0;
  return value;
}

namespace detail {

// The nine cells whose budget is a genuine formula, with their indicator
// triples (X, V_M, V_F). Everything in these triples is forced by the cell
// label: V_F counts a/b endpoints, V_M counts c endpoints, X = 1 exactly for
// the P-crossing kinds (MP here; plain-P cells all have budget 0 below).
struct EllCase {
  PairClass pair;
  LinkKind kind;
  int x, v_m, v_f;
};

inline const std::array<EllCase, 9>& ell_cases() {
  static const std::array<EllCase, 9> cases = {{
      {PairClass::ac, LinkKind::MP, 1, 1, 1},
      {PairClass::ad, LinkKind::MP, 1, 0, 1},
      {PairClass::bb, LinkKind::M, 0, 0, 2},
      {PairClass::bc, LinkKind::M, 0, 1, 1},
      {PairClass::bc, LinkKind::MP, 1, 1, 1},
      {PairClass::bd, LinkKind::M, 0, 0, 1},
      {PairClass::bd, LinkKind::MP, 1, 0, 1},
      {PairClass::cc, LinkKind::M, 0, 2, 0},
      {PairClass::cd, LinkKind::M, 0, 1, 0},
  }};
  return cases;
}

// Cells that cannot occur next to a critical solution (the disengaged set).
inline const std::array<std::pair<PairClass, LinkKind>, 18>& forbidden_cells() {
  static const std::array<std::pair<PairClass, LinkKind>, 18> cells = {{
      {PairClass::aa, LinkKind::M},  {PairClass::aa, LinkKind::MP},
      {PairClass::aa, LinkKind::P},  {PairClass::ab, LinkKind::M},
      {PairClass::ab, LinkKind::MP}, {PairClass::ac, LinkKind::M},
      {PairClass::ac, LinkKind::R},  {PairClass::ad, LinkKind::M},
      {PairClass::ad, LinkKind::R},  {PairClass::bb, LinkKind::MP},
      {PairClass::cc, LinkKind::P},  {PairClass::cc, LinkKind::MP},
      {PairClass::cd, LinkKind::P},  {PairClass::cd, LinkKind::MP},
      {PairClass::dd, LinkKind::M},  {PairClass::dd, LinkKind::P},
      {PairClass::dd, LinkKind::MP}, {PairClass::dd, LinkKind::R},
  }};
  return cells;
}

}  // namespace detail

// Full 10x4 budget table for a given alpha: 18 disengaged cells, 9 formula
// cells, and 13 cells whose budget is identically zero.
inline EllTable ell_table(const Rational& alpha) {
  check_alpha(alpha);
  EllTable t;
  t.alpha = alpha;
  for (auto& row : t.cells)
    for (auto& cell : row) cell = Int(0);
  for (const auto& [pair, kind] : detail::forbidden_cells())
    t.at(pair, kind) = std::nullopt;
  for (const auto& c : detail::ell_cases())
    t.at(c.pair, c.kind) = ell_budget(c.x, c.v_m, c.v_f, alpha);
  return t;
}

// Critical-coverage fraction: when |V(F)|/n reaches f_alpha, the trivial
// bound n/2 takes over from the LP bound. f_alpha = 3/(6 + 4 l_bd^M +
// 2 l_ad^MP), a nondecreasing step function of alpha with value <= 3/10.
inline Rational f_alpha(const Rational& alpha) {
  const Int ell_bd = ell_budget(0, 0, 1, alpha);
  const Int ell_ad = ell_budget(1, 0, 1, alpha);
  return Rational(3) / Rational(6 + 4 * ell_bd + 2 * ell_ad);
}

namespace detail {

// The three aggregate coefficients of the closed-form LP value
// n * (R - S * vF/n) / T.
struct LpShape {
  Int ell_cd, ell_bd, ell_ad;
  Rational r, s, t;
};

inline LpShape lp_shape(const Rational& alpha) {
  LpShape shape;
  shape.ell_cd = ell_budget(0, 1, 0, alpha);
  shape.ell_bd = ell_budget(0, 0, 1, alpha);
  shape.ell_ad = ell_budget(1, 0, 1, alpha);
  shape.r = Rational(3 + 3 * shape.ell_cd);
  shape.s = Rational(3 + 2 * shape.ell_bd + shape.ell_ad);
  shape.t = Rational(3 + 6 * shape.ell_cd);
  return shape;
}

}  // namespace detail

// Optimal value of the lower-bound LP: max{n/2, (R n - S vF)/T}, exactly.
// Piecewise linear and nonincreasing in vF, with its kink at vF = n f_alpha.
inline Rational lp_value(int n, int v_f, const Rational& alpha) {
  check_alpha(alpha);
  if (v_f < 0 || v_f > n)
    throw IntervalError("lp_value: vF must lie in [0, n]");
  const detail::LpShape shape = detail::lp_shape(alpha);
  const Rational linear =
      (shape.r * n - shape.s * v_f) / shape.t;
  const Rational half = Rational(n) / 2;
  return std::max(half, linear);
}

inline constexpr int kLpVarCount = 16;
inline constexpr int kLpRowCount = 7;

// Variable order used throughout: thirteen link-count variables (one per
// realizable cell that can carry weight), then the three aggregates
// x_A (internal-covered vertices), x_B (border-covered vertices), and
// x_M (component merges).
inline const std::array<const char*, kLpVarCount>& lp_variable_names() {
  static const std::array<const char*, kLpVarCount> names = {
      "x_aa^R", "x_ab^P",  "x_ac^MP", "x_ad^P", "x_ad^MP", "x_bb^M",
      "x_bb^P", "x_bc^M",  "x_bc^MP", "x_bd^M", "x_bd^MP", "x_cc^M",
      "x_cd^M", "x_A",     "x_B",     "x_M"};
  return names;
}

inline const std::array<const char*, kLpRowCount>& lp_constraint_names() {
  static const std::array<const char*, kLpRowCount> names = {
      "A-cover",        "B-cover", "D-cover", "P-crossing",
      "M-connectivity", "F-span",  "capacity"};
  return names;
}

// The lower-bound LP in standard form:
//   minimize objective . x   subject to   rows[i] . x >= rhs_i,  x >= 0,
// where rhs_i = rhs[i].first * n + rhs[i].second * vF. Row meanings:
//   A-cover         each internal-covered vertex needs a link endpoint,
//                   and an aa-link supplies two;
//   B-cover         likewise for border-covered vertices;
//   D-cover         unclassified vertices are endpoints of d-links or get
//                   absorbed by merges (two per merge);
//   P-crossing      each border-chord-crossing link frees at most two
//                   border vertices;
//   M-connectivity  merges are paid for by per-cell budgets;
//   F-span          the a- and b-classes jointly exhaust V(F);
//   capacity        merges and covered vertices fit inside n.
struct LpProgram {
  std::array<std::array<Rational, kLpVarCount>, kLpRowCount> rows{};
  std::array<std::pair<Rational, Rational>, kLpRowCount> rhs{};
  std::array<Rational, kLpVarCount> objective{};
};

inline LpProgram lp_program(const Rational& alpha) {
  check_alpha(alpha);
  const EllTable t = ell_table(alpha);
  auto ell = [&t](PairClass p, LinkKind k) { return Rational(*t.at(p, k)); };

  // Variable indices, mirroring lp_variable_names().
  enum : int {
    aaR, abP, acMP, adP, adMP, bbM, bbP, bcM,
    bcMP, bdM, bdMP, ccM, cdM, xA, xB, xM
  };

  LpProgram lp;
  for (int j = 0; j < kLpVarCount; ++j)
    lp.objective[static_cast<std::size_t>(j)] =
        (j == xA || j == xB) ? Rational(0) : Rational(1);

  auto& rows = lp.rows;
  // A-cover: 2 x_aa^R + x_ab^P + x_ac^MP + x_ad^P + x_ad^MP >= x_A.
  rows[0][aaR] = 2;
  rows[0][abP] = rows[0][acMP] = rows[0][adP] = rows[0][adMP] = 1;
  rows[0][xA] = -1;
  // B-cover: x_ab^P + 2 x_bb^M + 2 x_bb^P + x_bc^M + x_bc^MP + x_bd^M
  //          + x_bd^MP >= x_B.
  rows[1][abP] = 1;
  rows[1][bbM] = rows[1][bbP] = 2;
  rows[1][bcM] = rows[1][bcMP] = rows[1][bdM] = rows[1][bdMP] = 1;
  rows[1][xB] = -1;
  // D-cover: x_ad^P + x_ad^MP + x_bd^M + x_bd^MP + x_cd^M + 2 x_M >= n - vF.
  rows[2][adP] = rows[2][adMP] = rows[2][bdM] = rows[2][bdMP] = 1;
  rows[2][cdM] = 1;
  rows[2][xM] = 2;
  lp.rhs[2] = {Rational(1), Rational(-1)};
  // P-crossing: 2 (x_ab^P + x_ac^MP + x_ad^P + x_ad^MP + x_bb^P + x_bc^MP
  //                + x_bd^MP) >= x_B.
  rows[3][abP] = rows[3][acMP] = rows[3][adP] = rows[3][adMP] = 2;
  rows[3][bbP] = rows[3][bcMP] = rows[3][bdMP] = 2;
  rows[3][xB] = -1;
  // M-connectivity: sum of budget-weighted cell counts >= x_M.
  rows[4][acMP] = ell(PairClass::ac, LinkKind::MP);
  rows[4][adMP] = ell(PairClass::ad, LinkKind::MP);
  rows[4][bbM] = ell(PairClass::bb, LinkKind::M);
  rows[4][bcM] = ell(PairClass::bc, LinkKind::M);
  rows[4][bcMP] = ell(PairClass::bc, LinkKind::MP);
  rows[4][bdM] = ell(PairClass::bd, LinkKind::M);
  rows[4][bdMP] = ell(PairClass::bd, LinkKind::MP);
  rows[4][ccM] = ell(PairClass::cc, LinkKind::M);
  rows[4][cdM] = ell(PairClass::cd, LinkKind::M);
  rows[4][xM] = -1;
  // F-span: x_A + x_B >= vF.
  rows[5][xA] = rows[5][xB] = 1;
  lp.rhs[5] = {Rational(0), Rational(1)};
  // capacity: x_A + x_B + 2 x_M <= n, flipped into >= form.
  rows[6][xA] = rows[6][xB] = -1;
  rows[6][xM] = -2;
  lp.rhs[6] = {Rational(-1), Rational(0)};
  return lp;
}

// A verified optimal primal/dual pair for the lower-bound LP at one
// (n, vF, alpha). Construction in lp_certificates checks feasibility of both
// sides and objective equality before returning.
struct LpCertificate {
  Rational alpha;
  int n{0};
  int v_f{0};
  std::array<Rational, kLpVarCount> primal{};
  std::array<Rational, kLpRowCount> dual{};
  Rational objective;
};

namespace detail {

// The closed-form primal point that is optimal while vF stays below the
// kink n f_alpha. v is passed as an exact rational so the same formula can
// be evaluated at the kink itself (v = n f_alpha), where it still applies.
inline std::array<Rational, kLpVarCount> primal_point_low(
    int n, const Rational& v, const Rational& alpha, const LpShape& shape) {
  enum : int {
    aaR, abP, acMP, adP, adMP, bbM, bbP, bcM,
    bcMP, bdM, bdMP, ccM, cdM, xA, xB, xM
  };
  std::array<Rational, kLpVarCount> x{};
  x[xA] = v / 3;
  x[xB] = Rational(2) * v / 3;
  x[bdM] = Rational(2) * v / 3;
  x[xM] = (Rational(3 * shape.ell_cd) * n +
           Rational(shape.ell_ad + 2 * shape.ell_bd - 6 * shape.ell_cd) * v) /
          shape.t;
  x[cdM] = (Rational(3) * n -
            v * Rational(2 * shape.ell_ad + 4 * shape.ell_bd + 6)) /
           shape.t;
  // The one structural branch: the vF/3 of a-endpoints ride on crossing
  // ad-links when those can still merge (alpha <= 2/3), plain ones otherwise.
  if (alpha > Rational(2, 3))
    x[adP] = v / 3;
  else
    x[adMP] = v / 3;
  return x;
}

// The degenerate primal point for vF = n: cover everything with aa-links.
inline std::array<Rational, kLpVarCount> primal_point_full(int n) {
  enum : int { aaR = 0, xA = 13 };
  std::array<Rational, kLpVarCount> x{};
  x[xA] = Rational(n);
  x[aaR] = Rational(n) / 2;
  return x;
}

}  // namespace detail

// Construct and verify optimal certificates for lp_value(n, vF, alpha).
// Below the kink the closed-form point is optimal outright; past it the
// primal is the convex combination of the kink point and the all-covered
// point, and the constant dual (1/2, 1/2, 1/2, 0, 0, 1/2, 0) takes over.
// Any arithmetic discrepancy surfaces as CertificateInfeasibleError naming
// the violated constraint.
inline LpCertificate lp_certificates(int n, int v_f, const Rational& alpha) {
  check_alpha(alpha);
  if (n < 1 || v_f < 0 || v_f > n)
    throw IntervalError("lp_certificates: vF must lie in [0, n]");
  const detail::LpShape shape = detail::lp_shape(alpha);
  const Rational f = f_alpha(alpha);
  const Rational kink = Rational(n) * f;
  const bool below_kink = Rational(v_f) < kink;

  LpCertificate cert;
  cert.alpha = alpha;
  cert.n = n;
  cert.v_f = v_f;
  if (below_kink) {
    cert.primal = detail::primal_point_low(n, Rational(v_f), alpha, shape);
    const Rational d = Rational(2 * shape.ell_cd + 1);
    const Rational y_shared =
        Rational(3 * shape.ell_cd - 2 * shape.ell_bd - shape.ell_ad) /
        (3 * d);
    cert.dual[0] = y_shared;
    cert.dual[1] = Rational(shape.ell_cd - shape.ell_bd) / d;
    cert.dual[2] = Rational(shape.ell_cd + 1) / d;
    cert.dual[3] = Rational(shape.ell_bd - shape.ell_ad) / (3 * d);
    cert.dual[4] = Rational(1) / d;
    cert.dual[5] = y_shared;
    cert.dual[6] = 0;
  } else {
    // Convex combination: weight lambda on the kink point, 1 - lambda on the
    // all-covered point, chosen so the combined coverage equals vF.
    const Rational lambda = (Rational(n) - v_f) / (Rational(n) - kink);
    const auto low = detail::primal_point_low(n, kink, alpha, shape);
    const auto full = detail::primal_point_full(n);
    for (int j = 0; j < kLpVarCount; ++j) {
      const auto jz = static_cast<std::size_t>(j);
      cert.primal[jz] = lambda * low[jz] + (1 - lambda) * full[jz];
    }
    cert.dual = {Rational(1, 2), Rational(1, 2), Rational(1, 2), Rational(0),
                 Rational(0),    Rational(1, 2), Rational(0)};
  }

  // Mechanical verification against the constraint matrix.
  const LpProgram lp = lp_program(alpha);
  for (int j = 0; j < kLpVarCount; ++j) {
    if (cert.primal[static_cast<std::size_t>(j)] < 0)
      throw CertificateInfeasibleError(
          std::string("primal variable ") + lp_variable_names()[j] +
          " is negative: " +
          format_rational(cert.primal[static_cast<std::size_t>(j)]));
  }
  for (int i = 0; i < kLpRowCount; ++i) {
    const auto iz = static_cast<std::size_t>(i);
    Rational lhs = 0;
    for (int j = 0; j < kLpVarCount; ++j)
      lhs += lp.rows[iz][static_cast<std::size_t>(j)] *
             cert.primal[static_cast<std::size_t>(j)];
    const Rational rhs = lp.rhs[iz].first * n + lp.rhs[iz].second * v_f;
    if (lhs < rhs)
      throw CertificateInfeasibleError(
          std::string("primal assignment violates ") +
          lp_constraint_names()[i] + ": " + format_rational(lhs) + " < " +
          format_rational(rhs));
  }
  for (int i = 0; i < kLpRowCount; ++i) {
    if (cert.dual[static_cast<std::size_t>(i)] < 0)
      throw CertificateInfeasibleError(
          std::string("dual multiplier for ") + lp_constraint_names()[i] +
          " is negative: " +
          format_rational(cert.dual[static_cast<std::size_t>(i)]));
  }
  for (int j = 0; j < kLpVarCount; ++j) {
    const auto jz = static_cast<std::size_t>(j);
    Rational lhs = 0;
    for (int i = 0; i < kLpRowCount; ++i)
      lhs += lp.rows[static_cast<std::size_t>(i)][jz] *
             cert.dual[static_cast<std::size_t>(i)];
    if (lhs > lp.objective[jz])
      throw CertificateInfeasibleError(
          std::string("dual assignment violates the column of ") +
          lp_variable_names()[j] + ": " + format_rational(lhs) + " > " +
          format_rational(lp.objective[jz]));
  }
  Rational primal_objective = 0;
  for (int j = 0; j < kLpVarCount; ++j) {
    const auto jz = static_cast<std::size_t>(j);
    primal_objective += lp.objective[jz] * cert.primal[jz];
  }
  Rational dual_objective = 0;
  for (int i = 0; i < kLpRowCount; ++i) {
    const auto iz = static_cast<std::size_t>(i);
    dual_objective +=
        (lp.rhs[iz].first * n + lp.rhs[iz].second * v_f) * cert.dual[iz];
  }
  if (primal_objective != dual_objective)
    throw CertificateInfeasibleError(
        "objective gap: primal " + format_rational(primal_objective) +
        " vs dual " + format_rational(dual_objective));
  if (primal_objective != lp_value(n, v_f, alpha))
    throw CertificateInfeasibleError(
        "certificate objective " + format_rational(primal_objective) +
        " differs from the closed-form value " +
        format_rational(lp_value(n, v_f, alpha)));
  cert.objective = primal_objective;
  return cert;
}

// Worst-case approximation ratio of the basic local search at one alpha:
// 2 - 2 (1 - alpha) f_alpha.
inline Rational ratio_bound(const Rational& alpha) {
  check_alpha(alpha);
  return Rational(2) - Rational(2) * (Rational(1) - alpha) * f_alpha(alpha);
}

namespace detail {

// Pairwise summation keeps operand denominators balanced; a left fold over
// tens of thousands of step-function terms is measurably slower.
inline Rational balanced_sum(const std::vector<Rational>& terms,
                             std::size_t lo, std::size_t hi) {
  if (hi == lo) return Rational(0);
  if (hi - lo == 1) return terms[lo];
  const std::size_t mid = lo + (hi - lo) / 2;
  return balanced_sum(terms, lo, mid) + balanced_sum(terms, mid, hi);
}

}  // namespace detail

// Ratio bound for the refined search over an ascending pass schedule:
// 2 - 2 sum_j (a_{j+1} - a_j) f_{a_j}, with a_{s+1} taken as 1.
inline Rational refined_bound(const std::vector<Rational>& alphas) {
  if (alphas.empty())
    throw AlphaRangeError("refined_bound: schedule must be nonempty");
  for (const Rational& a : alphas) check_alpha(a);
  for (std::size_t j = 1; j < alphas.size(); ++j)
    if (!(alphas[j - 1] < alphas[j]))
      throw AlphaRangeError("refined_bound: schedule must be strictly "
                            "ascending");
  std::vector<Rational> terms;
  terms.reserve(alphas.size());
  for (std::size_t j = 0; j < alphas.size(); ++j) {
    const Rational next =
        (j + 1 < alphas.size()) ? alphas[j + 1] : Rational(1);
    terms.push_back((next - alphas[j]) * f_alpha(alphas[j]));
  }
  return Rational(2) -
         Rational(2) * detail::balanced_sum(terms, 0, terms.size());
}

// Riemann-sum bound over the canonical schedule: nonincreasing in k_max and
// convergent from above to the integral bound (below 1.87032 in the limit).
inline Rational integral_bound(int k_max) {
  if (k_max < 1) throw FormatError("integral_bound: k_max must be >= 1");
  return refined_bound(alpha_schedule(k_max));
}

// Per-instance certified lower bound and ratio. The LP bound may only be
// claimed for a solution grown around a genuinely critical F, and only when
// the neighborhood size was large enough for the budget argument behind the
// LP to apply; both conditions are re-verified here rather than trusted.
struct BoundsReport {
  int n{0};
  int v_f{0};
  Rational alpha;
  int size{0};
  Int half_bound;                    // ceil(n/2), valid unconditionally
  bool critical{false};              // re-verified criticality of F
  bool n_max_sufficient{false};      // n_max >= connection budget + 1
  std::optional<Rational> lp_bound;  // present iff both gates hold
  Int lower_bound;                   // max of the applicable bounds, ceiled
  Rational ratio;                    // size / lower_bound, exact
};

inline BoundsReport certify(const Instance& inst, const LinkSet& f,
                            const LinkSet& solution, const Rational& alpha,
                            int n_max) {
  check_alpha(alpha);
  if (!(f.instance() == inst) || !(solution.instance() == inst))
    throw FormatError("certify: F and solution must belong to the instance");
  if (!is_feasible_crossing(solution).feasible)
    throw InfeasibleInputError("certify: solution is not feasible");

  BoundsReport report;
  report.n = inst.n();
  report.v_f = static_cast<int>(f.covered_vertices().size());
  report.alpha = alpha;
  report.size = solution.size();
  report.half_bound = ceil_rat(Rational(inst.n()) / 2);
  report.critical = is_critical(f, alpha, n_max);
  report.n_max_sufficient = Int(n_max) >= n_max_threshold(alpha);
  report.lower_bound = report.half_bound;
  if (report.critical && report.n_max_sufficient) {
    report.lp_bound = lp_value(report.n, report.v_f, alpha);
    report.lower_bound =
        std::max(report.lower_bound, ceil_rat(*report.lp_bound));
  }
  report.ratio = Rational(report.size) / Rational(report.lower_bound);
  return report;
}

// Vertex classification relative to a singleton-free solution F and a
// matching M that avoids V(F): internal-covered (a), border-covered (b),
// matched (c), everything else (d). A vertex that is border in any component
// counts as border. The four lists partition [1, n], each sorted ascending.
struct VertexClasses {
  VertexList internal_covered;
  VertexList border_covered;
  VertexList matched;
  VertexList rest;
};

inline VertexClasses classify_vertices(const Instance& inst, const LinkSet& f,
                                       const LinkSet& m) {
  if (!(f.instance() == inst) || !(m.instance() == inst))
    throw FormatError("classify_vertices: F and M must belong to the "
                      "instance");
  const ComponentPartition partition = components(f);
  if (!partition.singletons.empty())
    throw SingletonError("classify_vertices: F has singleton " +
                         to_string(partition.singletons.front()));

  const int n = inst.n();
  // 0 = rest, 1 = internal-covered, 2 = border-covered, 3 = matched.
  std::vector<int> label(static_cast<std::size_t>(n) + 1, 0);
  for (const CircleComponent& comp : partition.components)
    for (int v : comp.internal_vertices) label[static_cast<std::size_t>(v)] = 1;
  for (const CircleComponent& comp : partition.components)
    for (int v : comp.border_vertices) label[static_cast<std::size_t>(v)] = 2;

  for (const Chord& link : m.members()) {
    for (int v : {link.a, link.b}) {
      const auto vz = static_cast<std::size_t>(v);
      if (label[vz] == 1 || label[vz] == 2)
        throw OverlapError("matching link " + to_string(link) +
                           " touches covered vertex " + std::to_string(v));
      if (label[vz] == 3)
        throw OverlapError("matching links share vertex " + std::to_string(v));
      label[vz] = 3;
    }
  }

  VertexClasses classes;
  for (int v = 1; v <= n; ++v) {
    switch (label[static_cast<std::size_t>(v)]) {
      case 1: classes.internal_covered.push_back(v); break;
      case 2: classes.border_covered.push_back(v); break;
      case 3: classes.matched.push_back(v); break;
      default: classes.rest.push_back(v); break;
    }
  }
  return classes;
}

}  // namespace vca
