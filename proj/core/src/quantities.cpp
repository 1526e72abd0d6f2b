#include "trineq/quantities.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

namespace trineq {

namespace {

void require_unit_interval(double v, const char* what) {
  if (!(v >= 0.0 && v <= 1.0)) {
    std::ostringstream os;
    os << what << "=" << v << " must lie in [0,1]";
    throw DomainError(os.str());
  }
}

// Magnitude used to judge imaginary residue of traces.
double residue_scale(const HermMatrix& a, const Matrix& b, const Matrix& c) {
  const double n = static_cast<double>(a.dim());
  return n * n * a.max_abs() * b.cwiseAbs().maxCoeff() * c.cwiseAbs().maxCoeff();
}

double residue_scale(const HermMatrix& a, const Matrix& b) {
  const double n = static_cast<double>(a.dim());
  return n * a.max_abs() * b.cwiseAbs().maxCoeff();
}

// Tr[X H^2] - Tr[P H Q H], common to every L-type quantity.
double l_core(const HermMatrix& x, const HermMatrix& p, const HermMatrix& q, const HermMatrix& h,
              const char* what) {
  const Matrix& hm = h.matrix();
  const Matrix h2 = hm * hm;
  const double scale = residue_scale(x, hm, hm) + residue_scale(p, hm, q.matrix() * hm);
  const double first = checked_real(trace_of_product(x.matrix(), h2), scale, what);
  const double second =
      checked_real(trace_of_product(p.matrix() * hm, q.matrix() * hm), scale, what);
  return first - second;
}

// Tr[FG X* Y] - Tr[F X* G Y].
Complex corr_core(const Matrix& fg, const Matrix& f, const Matrix& g, const Matrix& x,
                  const Matrix& y) {
  const Matrix xs = x.adjoint();
  return trace_of_product(fg, xs * y) - trace_of_product(f * xs, g * y);
}

// -(1/2) Tr[[P, H0][Q, H0]], i.e. (1/2) Tr[(i[P,H0])(i[Q,H0])].
double commutator_form(const DensityMatrix& rho, const Observable& h, const HermMatrix& p,
                       const HermMatrix& q, const char* what) {
  const double mean = expectation(rho, h);
  const Matrix h0 = h.matrix().matrix() - mean * Matrix::Identity(h.dim(), h.dim());
  const Matrix cp = commutator(p.matrix(), h0);
  const Matrix cq = commutator(q.matrix(), h0);
  const double scale = residue_scale(p, h0, h0) + residue_scale(q, h0, h0);
  return -0.5 * checked_real(trace_of_product(cp, cq), scale, what);
}

void require_dims(const char* where, const DensityMatrix& rho, const Matrix& x) {
  require_same_dim(where, rho.matrix().matrix(), x);
}

double radicand_sqrt(double radicand, double v, const char* what) {
  if (radicand < 0.0) {
    if (radicand < -1e-9 * std::max(1.0, v * v)) {
      std::ostringstream os;
      os << what << ": negative radicand " << radicand;
      throw InternalConsistencyError(os.str());
    }
    return 0.0;
  }
  return std::sqrt(radicand);
}

}  // namespace

DensityMatrix::DensityMatrix(HermMatrix m) : m_(std::move(m)) {
  const PsdClass cls = classify_psd(m_);
  if (!cls.is_psd()) {
    std::ostringstream os;
    os.precision(17);
    os << "density matrix must be positive semidefinite, min eigenvalue " << cls.min_eigenvalue;
    throw DomainError(os.str());
  }
  const double tr = m_.trace();
  if (std::abs(tr - 1.0) > 1e-12) {
    std::ostringstream os;
    os.precision(17);
    os << "density matrix must have unit trace, got " << tr;
    throw DomainError(os.str());
  }
}

ScalarFnSpec ScalarFnSpec::power(double p) {
  require_unit_interval(p, "power exponent");
  return {Kind::power, p};
}

ScalarFnSpec ScalarFnSpec::mix(double alpha) {
  require_unit_interval(alpha, "mix parameter");
  return {Kind::mix, alpha};
}

ScalarFnSpec ScalarFnSpec::parse(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) {
    throw DomainError("function spec '" + text + "' must look like power:<p> or mix:<alpha>");
  }
  const std::string kind = text.substr(0, colon);
  const std::string num = text.substr(colon + 1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), value);
  if (ec != std::errc() || ptr != num.data() + num.size()) {
    throw DomainError("function spec '" + text + "': bad parameter");
  }
  if (kind == "power") return power(value);
  if (kind == "mix") return mix(value);
  throw DomainError("function spec '" + text + "': unknown kind '" + kind + "'");
}

double ScalarFnSpec::operator()(double x) const {
  if (x < 0.0) throw DomainError("scalar function evaluated at a negative argument");
  auto pw = [](double v, double p) { return p == 0.0 ? 1.0 : (v == 0.0 ? 0.0 : std::pow(v, p)); };
  if (kind_ == Kind::power) return pw(x, param_);
  return 0.5 * (pw(x, param_) + pw(x, 1.0 - param_));
}

std::string ScalarFnSpec::name() const {
  std::ostringstream os;
  os << (kind_ == Kind::power ? "power:" : "mix:") << param_;
  return os.str();
}

HermMatrix ScalarFnSpec::apply(const HermMatrix& rho) const {
  if (kind_ == Kind::power) return frac_power(rho, param_);
  return 0.5 * (frac_power(rho, param_) + frac_power(rho, 1.0 - param_));
}

double tsallis_rel_entropy(const HermMatrix& x, const HermMatrix& y, Deformation nu) {
  require_same_dim("tsallis_rel_entropy", x, y);
  const double v = nu.nu();
  const HermMatrix xp = frac_power(x, 1.0 - v);
  const HermMatrix yp = frac_power(y, v);
  const double cross = checked_real(trace_of_product(xp.matrix(), yp.matrix()),
                                    residue_scale(xp, yp.matrix()),
                                    "tsallis_rel_entropy");
  return (x.trace() - cross) / v;
}

double umegaki_rel_entropy(const HermMatrix& x, const HermMatrix& y) {
  require_same_dim("umegaki_rel_entropy", x, y);
  const SpectralDecomp sx = eig_hermitian(x);
  const SpectralDecomp sy = eig_hermitian(y);
  if (!classify_psd(sx.eigenvalues).is_pd() || !classify_psd(sy.eigenvalues).is_pd()) {
    throw SingularityError("umegaki_rel_entropy: both arguments must be positive definite");
  }
  auto log_fn = [](double t) { return std::log(t); };
  const HermMatrix diff = apply_spectral(sx, log_fn, "log") - apply_spectral(sy, log_fn, "log");
  return checked_real(trace_of_product(x.matrix(), diff.matrix()),
                      residue_scale(x, diff.matrix()), "umegaki_rel_entropy");
}

HermMatrix tsallis_rel_operator_entropy(const HermMatrix& x, const HermMatrix& y, Deformation nu) {
  require_same_dim("tsallis_rel_operator_entropy", x, y);
  const SpectralDecomp sx = eig_hermitian(x);
  if (!classify_psd(sx.eigenvalues).is_pd()) {
    throw SingularityError("tsallis_rel_operator_entropy: X must be positive definite");
  }
  const HermMatrix inner = congruence(frac_power(sx, -0.5), y);
  return congruence(frac_power(sx, 0.5), ln_nu_op(inner, nu));
}

double expectation(const DensityMatrix& rho, const Observable& h) {
  require_same_dim("expectation", rho.matrix(), h.matrix());
  return checked_real(trace_of_product(rho.matrix().matrix(), h.matrix().matrix()),
                      residue_scale(rho.matrix(), h.matrix().matrix()),
                      "expectation");
}

double variance(const DensityMatrix& rho, const Observable& h) {
  const double mean = expectation(rho, h);
  const Matrix& hm = h.matrix().matrix();
  const double second = checked_real(trace_of_product(rho.matrix().matrix(), hm * hm),
                                     residue_scale(rho.matrix(), hm, hm), "variance");
  return second - mean * mean;
}

double variance_centered(const DensityMatrix& rho, const Observable& h) {
  const double mean = expectation(rho, h);
  const Matrix h0 = h.matrix().matrix() - mean * Matrix::Identity(h.dim(), h.dim());
  return checked_real(trace_of_product(rho.matrix().matrix(), h0 * h0),
                      residue_scale(rho.matrix(), h0, h0), "variance_centered");
}

Complex covariance(const DensityMatrix& rho, const Observable& a, const Observable& b) {
  require_same_dim("covariance", a.matrix(), b.matrix());
  const Matrix& r = rho.matrix().matrix();
  return trace_of_product(r, a.matrix().matrix() * b.matrix().matrix()) -
         expectation(rho, a) * expectation(rho, b);
}

Complex covariance_centered(const DensityMatrix& rho, const Observable& a, const Observable& b) {
  require_same_dim("covariance_centered", a.matrix(), b.matrix());
  const Index n = rho.dim();
  const Matrix id = Matrix::Identity(n, n);
  const Matrix a0 = a.matrix().matrix() - expectation(rho, a) * id;
  const Matrix b0 = b.matrix().matrix() - expectation(rho, b) * id;
  return trace_of_product(rho.matrix().matrix(), a0 * b0);
}

double wyd_skew(const DensityMatrix& rho, const Observable& h, double alpha) {
  require_unit_interval(alpha, "alpha");
  require_same_dim("wyd_skew", rho.matrix(), h.matrix());
  const HermMatrix& r = rho.matrix();
  return l_core(r, frac_power(r, alpha), frac_power(r, 1.0 - alpha), h.matrix(), "wyd_skew");
}

double wy_skew(const DensityMatrix& rho, const Observable& h) { return wyd_skew(rho, h, 0.5); }

double wyd_skew_commutator_form(const DensityMatrix& rho, const Observable& h, double alpha) {
  require_unit_interval(alpha, "alpha");
  require_same_dim("wyd_skew", rho.matrix(), h.matrix());
  const HermMatrix& r = rho.matrix();
  return commutator_form(rho, h, frac_power(r, alpha), frac_power(r, 1.0 - alpha),
                         "wyd_skew_commutator_form");
}

double wy_skew_commutator_form(const DensityMatrix& rho, const Observable& h) {
  return wyd_skew_commutator_form(rho, h, 0.5);
}

double j_quantity(const DensityMatrix& rho, const Observable& h, JConvention convention) {
  require_same_dim("j_quantity", rho.matrix(), h.matrix());
  const double mean = expectation(rho, h);
  const Matrix h0 = h.matrix().matrix() - mean * Matrix::Identity(h.dim(), h.dim());
  const HermMatrix root = frac_power(rho.matrix(), 0.5);
  const Matrix anti = anticommutator(root.matrix(), h0);
  const double value =
      0.5 * checked_real(trace_of_product(anti, anti), residue_scale(root, h0, h0), "j_quantity");
  return convention == JConvention::consistent ? value : -value;
}

double u_quantity(const DensityMatrix& rho, const Observable& h) {
  const double v = variance(rho, h);
  const double i = wy_skew(rho, h);
  return radicand_sqrt(v * v - (v - i) * (v - i), v, "u_quantity");
}

double u_quantity_alpha(const DensityMatrix& rho, const Observable& h, double alpha) {
  const double v = variance(rho, h);
  const double i = wyd_skew(rho, h, alpha);
  return radicand_sqrt(v * v - (v - i) * (v - i), v, "u_quantity_alpha");
}

Complex corr(const DensityMatrix& rho, const Matrix& x, const Matrix& y) {
  return corr_alpha(rho, x, y, 0.5);
}

Complex corr_alpha(const DensityMatrix& rho, const Matrix& x, const Matrix& y, double alpha) {
  require_unit_interval(alpha, "alpha");
  require_dims("corr", rho, x);
  require_dims("corr", rho, y);
  const HermMatrix& r = rho.matrix();
  return corr_core(r.matrix(), frac_power(r, alpha).matrix(), frac_power(r, 1.0 - alpha).matrix(),
                   x, y);
}

Complex fg_corr(const DensityMatrix& rho, const Matrix& x, const Matrix& y, const ScalarFnSpec& f,
                const ScalarFnSpec& g) {
  require_dims("fg_corr", rho, x);
  require_dims("fg_corr", rho, y);
  const Matrix fm = f.apply(rho.matrix()).matrix();
  const Matrix gm = g.apply(rho.matrix()).matrix();
  return corr_core(fm * gm, fm, gm, x, y);
}

double fg_skew(const DensityMatrix& rho, const Observable& h, const ScalarFnSpec& f,
               const ScalarFnSpec& g) {
  require_same_dim("fg_skew", rho.matrix(), h.matrix());
  const HermMatrix fm = f.apply(rho.matrix());
  const HermMatrix gm = g.apply(rho.matrix());
  // f(rho) and g(rho) commute, so f(rho) g(rho) is Hermitian.
  const HermMatrix fg = HermMatrix::hermitian_part(fm.matrix() * gm.matrix());
  return l_core(fg, fm, gm, h.matrix(), "fg_skew");
}

double fg_skew_commutator_form(const DensityMatrix& rho, const Observable& h, const ScalarFnSpec& f,
                               const ScalarFnSpec& g) {
  require_same_dim("fg_skew", rho.matrix(), h.matrix());
  return commutator_form(rho, h, f.apply(rho.matrix()), g.apply(rho.matrix()),
                         "fg_skew_commutator_form");
}

double k_skew(const DensityMatrix& rho, const Observable& h, double alpha) {
  const ScalarFnSpec m = ScalarFnSpec::mix(alpha);
  return fg_skew(rho, h, m, m);
}

Complex corr_k(const DensityMatrix& rho, const Matrix& x, const Matrix& y, double alpha) {
  const ScalarFnSpec m = ScalarFnSpec::mix(alpha);
  return fg_corr(rho, x, y, m, m);
}

double l_quantity(const HermMatrix& x, const HermMatrix& y, const Observable& h, double t) {
  require_unit_interval(t, "t");
  require_same_dim("l_quantity", x, y);
  require_same_dim("l_quantity", x, h.matrix());
  return l_core(x, frac_power(x, t), frac_power(y, 1.0 - t), h.matrix(), "l_quantity");
}

}  // namespace trineq
