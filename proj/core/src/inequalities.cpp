#include "trineq/inequalities.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>

#include "trineq/sampling.hpp"

namespace trineq {

namespace {

constexpr std::array<std::pair<InequalityId, std::string_view>, 22> kNames{{
    {InequalityId::prop22_upper, "prop22_upper"},
    {InequalityId::furuta_upper_chain, "furuta_upper_chain"},
    {InequalityId::prop23_audenaert_upper, "prop23_audenaert_upper"},
    {InequalityId::audenaert_raw, "audenaert_raw"},
    {InequalityId::cmp_upper_bounds, "cmp_upper_bounds"},
    {InequalityId::prop31_peierls_bogoliubov, "prop31_peierls_bogoliubov"},
    {InequalityId::thm32_lower, "thm32_lower"},
    {InequalityId::op_lb_matrix, "op_lb_matrix"},
    {InequalityId::lemma33_golden_thompson, "lemma33_golden_thompson"},
    {InequalityId::lemma34_variational_i, "lemma34_variational_i"},
    {InequalityId::lemma34_variational_ii, "lemma34_variational_ii"},
    {InequalityId::cmp_lower_bounds, "cmp_lower_bounds"},
    {InequalityId::heisenberg, "heisenberg"},
    {InequalityId::schrodinger, "schrodinger"},
    {InequalityId::luo_u, "luo_u"},
    {InequalityId::yanagi_u_alpha, "yanagi_u_alpha"},
    {InequalityId::furuichi_schrodinger_u, "furuichi_schrodinger_u"},
    {InequalityId::wy_corr_bound, "wy_corr_bound"},
    {InequalityId::wyd_corr_bound_alpha, "wyd_corr_bound_alpha"},
    {InequalityId::thm42_fg, "thm42_fg"},
    {InequalityId::cor43_k, "cor43_k"},
    {InequalityId::ul_wy_known_false, "ul_wy_known_false"},
}};

constexpr std::array<InequalityId, 22> kAll = [] {
  std::array<InequalityId, 22> out{};
  for (std::size_t j = 0; j < kNames.size(); ++j) out[j] = kNames[j].first;
  return out;
}();

std::string param_text(const char* name, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%s=%.6g", name, v);
  return buf;
}

double tolerance_for(double lhs, double rhs, double rel) {
  return rel * std::max({1.0, std::abs(lhs), std::abs(rhs)});
}

double scale_of(const Matrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

// Re Tr[A B] with an imaginary-residue check relative to the operand sizes.
double real_tr(const Matrix& a, const Matrix& b, std::string_view what) {
  const double scale = static_cast<double>(a.rows()) * scale_of(a) * scale_of(b);
  return checked_real(trace_of_product(a, b), scale, what);
}

void stamp(GapReport& r, Index dim, std::string params) {
  r.provenance.dim = dim;
  r.provenance.params = std::move(params);
}

// -Tr[X ln_nu(X^{-1/2} Y X^{-1/2})]
double neg_tr_x_ln_nu(const HermMatrix& x, const HermMatrix& y, Deformation nu) {
  const HermMatrix x_inv_half = frac_power(x, -0.5);
  const HermMatrix z = congruence(x_inv_half, y);
  return -real_tr(x.matrix(), ln_nu_op(z, nu).matrix(), "Tr[X ln_nu(X^-1/2 Y X^-1/2)]");
}

// Y^{-1/2} X Y^{-1/2}
HermMatrix sandwich_by_y(const HermMatrix& x, const HermMatrix& y) {
  return congruence(frac_power(y, -0.5), x);
}

double pow_traces(double tr_x, double tr_y, double nu) {
  return std::pow(tr_x, 1.0 - nu) * std::pow(tr_y, nu);
}

}  // namespace

std::span<const InequalityId> all_inequalities() { return kAll; }

std::string_view to_string(InequalityId id) {
  for (const auto& [k, name] : kNames) {
    if (k == id) return name;
  }
  return "unknown";
}

std::optional<InequalityId> parse_inequality_id(std::string_view text) {
  for (const auto& [k, name] : kNames) {
    if (name == text) return k;
  }
  std::optional<InequalityId> hit;
  for (const auto& [k, name] : kNames) {
    if (name.size() > text.size() && name.substr(0, text.size()) == text &&
        name[text.size()] == '_') {
      if (hit) return std::nullopt;
      hit = k;
    }
  }
  return hit;
}

bool is_proved(InequalityId id) {
  switch (id) {
    case InequalityId::cmp_upper_bounds:
    case InequalityId::cmp_lower_bounds:
    case InequalityId::op_lb_matrix:
    case InequalityId::ul_wy_known_false:
      return false;
    default:
      return true;
  }
}

std::string_view to_string(Expectation e) {
  switch (e) {
    case Expectation::holds: return "holds";
    case Expectation::violated: return "violated";
    case Expectation::none: return "none";
  }
  return "none";
}

bool GapReport::unexpected() const {
  if (!note.empty() && note.rfind("error:", 0) == 0) return true;
  if (!applicable) return false;
  if (expectation == Expectation::holds) return !holds;
  if (expectation == Expectation::violated) return holds;
  return false;
}

double GapReport::term(std::string_view name) const {
  for (const auto& t : detail) {
    if (t.name == name) return t.value;
  }
  return std::numeric_limits<double>::quiet_NaN();
}

GapReport make_geq_report(InequalityId id, double lhs, double rhs, double rel_tol) {
  GapReport r;
  r.id = id;
  r.lhs = lhs;
  r.rhs = rhs;
  r.gap = lhs - rhs;
  retolerance(r, rel_tol);
  r.detail = {{"lhs", lhs}, {"rhs", rhs}};
  return r;
}

GapReport make_leq_report(InequalityId id, double lhs, double rhs, double rel_tol) {
  GapReport r = make_geq_report(id, rhs, lhs, rel_tol);
  r.lhs = lhs;
  r.rhs = rhs;
  r.detail = {{"lhs", lhs}, {"rhs", rhs}};
  return r;
}

void retolerance(GapReport& report, double rel_tol) {
  report.rel_tol = rel_tol;
  report.tolerance = tolerance_for(report.lhs, report.rhs, rel_tol);
  report.holds = report.gap >= -report.tolerance;
}

GapReport gap_prop22(const HermMatrix& x, const HermMatrix& y, Deformation nu) {
  require_same_dim("gap_prop22", x, y);
  const double d = tsallis_rel_entropy(x, y, nu);
  const double bound = neg_tr_x_ln_nu(x, y, nu);
  GapReport r = make_leq_report(InequalityId::prop22_upper, d, bound);
  stamp(r, x.dim(), param_text("nu", nu.nu()));
  return r;
}

std::pair<GapReport, GapReport> gap_furuta_chain(const HermMatrix& x, const HermMatrix& y,
                                                 Deformation nu) {
  require_same_dim("gap_furuta_chain", x, y);
  const SpectralBounds sb = spectral_bounds(x, y);
  if (sb.degenerate) {
    throw HypothesisError("furuta chain: h = M1 M2 / (m1 m2) = " + std::to_string(sb.h) +
                          " must exceed 1 (Kantorovich constant undefined at h = 1)");
  }
  const double v = nu.nu();
  const double d = tsallis_rel_entropy(x, y, nu);
  const double mid = neg_tr_x_ln_nu(x, y, nu);
  const double k = kantorovich(v, sb.h);
  const double lead = (1.0 - k) / v * pow_traces(x.trace(), y.trace(), v);

  GapReport lower = make_leq_report(InequalityId::furuta_upper_chain, d, mid);
  GapReport upper = make_leq_report(InequalityId::furuta_upper_chain, mid, lead + d);
  for (GapReport* r : {&lower, &upper}) {
    stamp(*r, x.dim(), param_text("nu", v));
    r->detail.push_back({"h", sb.h});
    r->detail.push_back({"K", k});
  }
  lower.note = "lower link";
  upper.note = "upper link";
  return {lower, upper};
}

GapReport gap_audenaert(const HermMatrix& a, const HermMatrix& b, double s) {
  require_same_dim("gap_audenaert", a, b);
  if (!(s >= 0.0 && s <= 1.0)) throw DomainError("gap_audenaert: s=" + std::to_string(s) + " must lie in [0,1]");
  const double lhs = real_tr(frac_power(a, s).matrix(), frac_power(b, 1.0 - s).matrix(),
                             "Tr[A^s B^(1-s)]");
  const AbsAndPositivePart ap = abs_and_positive_part(a - b);
  const double rhs = 0.5 * (a.trace() + b.trace() - ap.abs.trace());
  GapReport r = make_geq_report(InequalityId::audenaert_raw, lhs, rhs);
  stamp(r, a.dim(), param_text("s", s));
  return r;
}

GapReport gap_prop23(const HermMatrix& x, const HermMatrix& y, Deformation nu) {
  require_same_dim("gap_prop23", x, y);
  const double d = tsallis_rel_entropy(x, y, nu);
  const double bound = abs_and_positive_part(x - y).positive_part.trace() / nu.nu();
  GapReport r = make_leq_report(InequalityId::prop23_audenaert_upper, d, bound);
  stamp(r, x.dim(), param_text("nu", nu.nu()));
  return r;
}

GapReport gap_cmp_upper(const HermMatrix& x, const HermMatrix& y, Deformation nu) {
  require_same_dim("gap_cmp_upper", x, y);
  const double lhs = power_mean(x, y, nu.nu()).trace();
  const double rhs = 0.5 * (x.trace() + y.trace() - abs_and_positive_part(x - y).abs.trace());
  GapReport r = make_geq_report(InequalityId::cmp_upper_bounds, lhs, rhs);
  stamp(r, x.dim(), param_text("nu", nu.nu()));
  return r;
}

GapReport gap_prop31(const HermMatrix& x, const HermMatrix& y, Deformation nu) {
  require_same_dim("gap_prop31", x, y);
  const double v = nu.nu();
  const double d = tsallis_rel_entropy(x, y, nu);
  const double rhs = (x.trace() - pow_traces(x.trace(), y.trace(), v)) / v;
  GapReport r = make_geq_report(InequalityId::prop31_peierls_bogoliubov, d, rhs);
  stamp(r, x.dim(), param_text("nu", v));
  return r;
}

GapReport gap_thm32(const HermMatrix& x, const HermMatrix& y, Deformation nu,
                    HypothesisPolicy policy) {
  require_same_dim("gap_thm32", x, y);
  if (policy == HypothesisPolicy::enforce) {
    const PsdClass low = loewner_leq(HermMatrix::identity(y.dim()), y);
    if (!low.is_psd()) {
      throw HypothesisError("hypothesis not satisfied: I <= Y fails (min eigenvalue of Y - I is " +
                            std::to_string(low.min_eigenvalue) + ")");
    }
    const PsdClass high = loewner_leq(y, x);
    if (!high.is_psd()) {
      throw HypothesisError("hypothesis not satisfied: Y <= X fails (min eigenvalue of X - Y is " +
                            std::to_string(high.min_eigenvalue) + ")");
    }
  }
  const double v = nu.nu();
  const double d = tsallis_rel_entropy(x, y, nu);
  const HermMatrix ln_z = ln_nu_op(sandwich_by_y(x, y), nu);
  const double rhs = real_tr(frac_power(x, 1.0 - v).matrix(), ln_z.matrix(),
                             "Tr[X^(1-nu) ln_nu(Y^-1/2 X Y^-1/2)]");
  GapReport r = make_geq_report(InequalityId::thm32_lower, d, rhs);
  stamp(r, x.dim(), param_text("nu", v));
  if (policy == HypothesisPolicy::skip) r.note = "hypothesis not checked";
  return r;
}

HermMatrix op_lb_matrix(const HermMatrix& x, const HermMatrix& y, Deformation nu) {
  require_same_dim("op_lb_matrix", x, y);
  const double v = nu.nu();
  return frac_power(x, v) - frac_power(y, v) + HermMatrix::identity(x.dim()) -
         frac_power(sandwich_by_y(x, y), v);
}

double min_eig_op_lb(const HermMatrix& x, const HermMatrix& y, Deformation nu) {
  return eig_hermitian(op_lb_matrix(x, y, nu)).eigenvalues.minCoeff();
}

double op_lb_trace(const HermMatrix& x, const HermMatrix& y, Deformation nu) {
  const HermMatrix m = op_lb_matrix(x, y, nu);
  return real_tr(frac_power(x, 1.0 - nu.nu()).matrix(), m.matrix(), "Tr[X^(1-nu) op_lb]");
}

GapReport gap_op_lb_matrix(const HermMatrix& x, const HermMatrix& y, Deformation nu) {
  const double min_eig = min_eig_op_lb(x, y, nu);
  GapReport r = make_geq_report(InequalityId::op_lb_matrix, min_eig, 0.0);
  stamp(r, x.dim(), param_text("nu", nu.nu()));
  r.detail = {{"min_eigenvalue", min_eig}};
  return r;
}

GapReport gap_lemma33(const HermMatrix& x, const HermMatrix& y, Deformation nu) {
  require_same_dim("gap_lemma33", x, y);
  const double lhs = exp_nu_op(x + y, nu).trace();
  const double rhs = real_tr(exp_nu_op(x, nu).matrix(), exp_nu_op(y, nu).matrix(),
                             "Tr[exp_nu(X) exp_nu(Y)]");
  GapReport r = make_leq_report(InequalityId::lemma33_golden_thompson, lhs, rhs);
  stamp(r, x.dim(), param_text("nu", nu.nu()));
  return r;
}

double variational_objective_i(const HermMatrix& x, const HermMatrix& a, const HermMatrix& y,
                               Deformation nu) {
  const double lin = real_tr(frac_power(x, 1.0 - nu.nu()).matrix(), a.matrix(), "Tr[X^(1-nu) A]");
  return lin - tsallis_rel_entropy(x, y, nu);
}

double variational_closed_form_i(const HermMatrix& a, const HermMatrix& y, double d,
                                 Deformation nu) {
  const double tr_e = exp_nu_op(a + ln_nu_op(y, nu), nu).trace();
  return d * ln_nu(tr_e / d, nu);
}

double variational_objective_ii(const HermMatrix& a, const HermMatrix& x, const HermMatrix& b,
                                Deformation nu) {
  const double d = x.trace();
  const double lin = real_tr(frac_power(x, 1.0 - nu.nu()).matrix(), a.matrix(), "Tr[X^(1-nu) A]");
  return lin - d * ln_nu(exp_nu_op(a + b, nu).trace() / d, nu);
}

double variational_closed_form_ii(const HermMatrix& x, const HermMatrix& b, Deformation nu) {
  return tsallis_rel_entropy(x, exp_nu_op(b, nu), nu);
}

namespace {

VariationalReport finish_variational(InequalityId id, double closed, double worst, int samples,
                                     Index dim, double nu) {
  VariationalReport out;
  out.closed_form = closed;
  out.candidates = samples;
  out.dominance = make_leq_report(id, worst, closed, kVariationalRelTol);
  stamp(out.dominance, dim, param_text("nu", nu));
  out.dominance.detail = {{"max_candidate", worst}, {"closed_form", closed}};
  return out;
}

void attach_maximizer(VariationalReport& out, double value) {
  out.maximizer_value = value;
  out.maximizer_error = std::abs(value - out.closed_form);
  out.maximizer_tolerance = kVariationalRelTol * std::max(1.0, std::abs(out.closed_form));
  out.maximizer_matches = out.maximizer_error <= out.maximizer_tolerance;
  out.dominance.detail.push_back({"maximizer_value", value});
  if (!out.maximizer_matches) {
    out.dominance.note = "maximizer value differs from closed form";
  }
}

}  // namespace

VariationalReport check_variational_i(const HermMatrix& a, const HermMatrix& y, double d,
                                      Deformation nu, int samples, std::uint64_t seed) {
  require_same_dim("check_variational_i", a, y);
  if (!(d > 0.0)) throw DomainError("check_variational_i: d must be positive");
  if (!classify_psd(a).is_psd()) throw DomainError("check_variational_i: A must be PSD");
  if (!classify_psd(y).is_pd()) throw SingularityError("check_variational_i: Y must be PD");

  const double closed = variational_closed_form_i(a, y, d, nu);
  SplitMix64 rng(seed);
  double worst = -std::numeric_limits<double>::infinity();
  for (int k = 0; k < samples; ++k) {
    const HermMatrix g = random_psd(a.dim(), 1.0, rng);
    const HermMatrix x = (d / g.trace()) * g;
    worst = std::max(worst, variational_objective_i(x, a, y, nu));
  }
  if (samples <= 0) worst = closed;
  VariationalReport out =
      finish_variational(InequalityId::lemma34_variational_i, closed, worst, samples, a.dim(), nu.nu());

  const HermMatrix e = exp_nu_op(a + ln_nu_op(y, nu), nu);
  const HermMatrix x0 = (d / e.trace()) * e;
  attach_maximizer(out, variational_objective_i(x0, a, y, nu));
  return out;
}

VariationalReport check_variational_ii(const HermMatrix& x, const HermMatrix& b, Deformation nu,
                                       int samples, std::uint64_t seed) {
  require_same_dim("check_variational_ii", x, b);
  if (!classify_psd(x).is_pd()) throw SingularityError("check_variational_ii: X must be PD");
  if (!classify_psd(b).is_psd()) throw DomainError("check_variational_ii: B must be PSD");

  const double closed = variational_closed_form_ii(x, b, nu);
  SplitMix64 rng(seed);
  double worst = -std::numeric_limits<double>::infinity();
  for (int k = 0; k < samples; ++k) {
    const HermMatrix a = random_psd(x.dim(), 1.0, rng);
    worst = std::max(worst, variational_objective_ii(a, x, b, nu));
  }
  if (samples <= 0) worst = closed;
  VariationalReport out = finish_variational(InequalityId::lemma34_variational_ii, closed, worst,
                                             samples, x.dim(), nu.nu());

  const HermMatrix a0 = ln_nu_op(x, nu) - b;
  if (classify_psd(a0).is_psd()) {
    attach_maximizer(out, variational_objective_ii(a0, x, b, nu));
  }
  return out;
}

GapReport gap_cmp_lower(const HermMatrix& x, const HermMatrix& y, Deformation nu) {
  require_same_dim("gap_cmp_lower", x, y);
  const double v = nu.nu();
  const HermMatrix x_pow = frac_power(x, 1.0 - v);
  const double first = real_tr(x_pow.matrix(), frac_power(sandwich_by_y(x, y), v).matrix(),
                               "Tr[X^(1-nu) (Y^-1/2 X Y^-1/2)^nu]");
  const double lhs = first + pow_traces(x.trace(), y.trace(), v);
  const double rhs = x_pow.trace() + x.trace();
  GapReport r = make_geq_report(InequalityId::cmp_lower_bounds, lhs, rhs);
  stamp(r, x.dim(), param_text("nu", v));
  return r;
}

bool is_uncertainty_id(InequalityId id) {
  switch (id) {
    case InequalityId::heisenberg:
    case InequalityId::schrodinger:
    case InequalityId::luo_u:
    case InequalityId::yanagi_u_alpha:
    case InequalityId::furuichi_schrodinger_u:
    case InequalityId::wy_corr_bound:
    case InequalityId::wyd_corr_bound_alpha:
    case InequalityId::ul_wy_known_false:
      return true;
    default:
      return false;
  }
}

GapReport gap_uncertainty(InequalityId id, const DensityMatrix& rho, const Observable& a,
                          const Observable& b, std::optional<double> alpha) {
  if (!is_uncertainty_id(id)) {
    throw DomainError("gap_uncertainty: " + std::string(to_string(id)) + " is not an uncertainty relation");
  }
  require_same_dim("gap_uncertainty", rho.matrix(), a.matrix());
  require_same_dim("gap_uncertainty", rho.matrix(), b.matrix());
  const bool needs_alpha = id == InequalityId::yanagi_u_alpha || id == InequalityId::wyd_corr_bound_alpha;
  if (needs_alpha) {
    if (!alpha) throw DomainError(std::string(to_string(id)) + " requires alpha");
    if (!(*alpha >= 0.0 && *alpha <= 1.0)) throw DomainError("alpha must lie in [0,1]");
  }

  const Matrix& am = a.matrix().matrix();
  const Matrix& bm = b.matrix().matrix();
  const double comm_sq = std::norm(trace(rho.matrix().matrix() * commutator(am, bm)));
  double lhs = 0.0;
  double rhs = 0.25 * comm_sq;
  std::vector<GapTerm> terms;

  switch (id) {
    case InequalityId::heisenberg: {
      const double va = variance(rho, a), vb = variance(rho, b);
      lhs = va * vb;
      terms = {{"V(A)", va}, {"V(B)", vb}};
      break;
    }
    case InequalityId::schrodinger: {
      const double va = variance(rho, a), vb = variance(rho, b);
      const double cov = covariance(rho, a, b).real();
      lhs = va * vb - cov * cov;
      terms = {{"V(A)", va}, {"V(B)", vb}, {"ReCov", cov}};
      break;
    }
    case InequalityId::luo_u: {
      const double ua = u_quantity(rho, a), ub = u_quantity(rho, b);
      lhs = ua * ub;
      terms = {{"U(A)", ua}, {"U(B)", ub}};
      break;
    }
    case InequalityId::yanagi_u_alpha: {
      const double ua = u_quantity_alpha(rho, a, *alpha), ub = u_quantity_alpha(rho, b, *alpha);
      lhs = ua * ub;
      rhs = *alpha * (1.0 - *alpha) * comm_sq;
      terms = {{"U_alpha(A)", ua}, {"U_alpha(B)", ub}};
      break;
    }
    case InequalityId::furuichi_schrodinger_u: {
      const double ua = u_quantity(rho, a), ub = u_quantity(rho, b);
      const double c = corr(rho, am, bm).real();
      lhs = ua * ub - c * c;
      terms = {{"U(A)", ua}, {"U(B)", ub}, {"ReCorr", c}};
      break;
    }
    case InequalityId::wy_corr_bound: {
      const double ia = wy_skew(rho, a), ib = wy_skew(rho, b);
      const double c = corr(rho, am, bm).real();
      lhs = ia * ib;
      rhs = c * c;
      terms = {{"I(A)", ia}, {"I(B)", ib}, {"ReCorr", c}};
      break;
    }
    case InequalityId::wyd_corr_bound_alpha: {
      const double ia = wyd_skew(rho, a, *alpha), ib = wyd_skew(rho, b, *alpha);
      const double c = corr_alpha(rho, am, bm, *alpha).real();
      lhs = ia * ib;
      rhs = c * c;
      terms = {{"I_alpha(A)", ia}, {"I_alpha(B)", ib}, {"ReCorr_alpha", c}};
      break;
    }
    case InequalityId::ul_wy_known_false: {
      const double ia = wy_skew(rho, a), ib = wy_skew(rho, b);
      lhs = ia * ib;
      terms = {{"I(A)", ia}, {"I(B)", ib}};
      break;
    }
    default:
      break;
  }

  GapReport r = make_geq_report(id, lhs, rhs);
  r.detail.insert(r.detail.end(), terms.begin(), terms.end());
  r.detail.push_back({"|Tr[rho[A,B]]|^2", comm_sq});
  stamp(r, rho.dim(), needs_alpha ? param_text("alpha", *alpha) : std::string{});
  return r;
}

GapReport gap_thm42(const DensityMatrix& rho, const Observable& a, const Observable& b,
                    const ScalarFnSpec& f, const ScalarFnSpec& g) {
  require_same_dim("gap_thm42", rho.matrix(), a.matrix());
  require_same_dim("gap_thm42", rho.matrix(), b.matrix());
  const double ia = fg_skew(rho, a, f, g);
  const double ib = fg_skew(rho, b, f, g);
  const double c = fg_corr(rho, a.matrix().matrix(), b.matrix().matrix(), f, g).real();
  GapReport r = make_geq_report(InequalityId::thm42_fg, ia * ib, c * c);
  r.detail.push_back({"I_fg(A)", ia});
  r.detail.push_back({"I_fg(B)", ib});
  r.detail.push_back({"ReCorr_fg", c});
  stamp(r, rho.dim(), "f=" + f.name() + ",g=" + g.name());
  return r;
}

GapReport gap_cor43(const DensityMatrix& rho, const Observable& a, const Observable& b,
                    double alpha) {
  require_same_dim("gap_cor43", rho.matrix(), a.matrix());
  require_same_dim("gap_cor43", rho.matrix(), b.matrix());
  const double ka = k_skew(rho, a, alpha);
  const double kb = k_skew(rho, b, alpha);
  const double c = corr_k(rho, a.matrix().matrix(), b.matrix().matrix(), alpha).real();
  GapReport r = make_geq_report(InequalityId::cor43_k, ka * kb, c * c);
  r.detail.push_back({"K(A)", ka});
  r.detail.push_back({"K(B)", kb});
  r.detail.push_back({"ReCorrK", c});
  stamp(r, rho.dim(), param_text("alpha", alpha));
  return r;
}

std::vector<std::pair<ScalarFnSpec, ScalarFnSpec>> builtin_monotonic_pairs(double alpha) {
  return {
      {ScalarFnSpec::power(alpha), ScalarFnSpec::power(1.0 - alpha)},
      {ScalarFnSpec::mix(alpha), ScalarFnSpec::mix(alpha)},
      {ScalarFnSpec::power(alpha), ScalarFnSpec::power(alpha)},
      {ScalarFnSpec::power(alpha), ScalarFnSpec::mix(alpha)},
  };
}

}  // namespace trineq
