#include "trineq/deformed.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace trineq {

namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

}  // namespace

Deformation::Deformation(double nu) : nu_(nu) {
  if (!(nu > 0.0 && nu <= 1.0)) {
    throw DomainError("deformation parameter nu=" + fmt(nu) + " must lie in (0,1]");
  }
}

double ln_nu(double x, Deformation d) {
  if (!(x >= 0.0)) throw DomainError("ln_nu: argument " + fmt(x) + " is negative");
  const double nu = d.nu();
  if (x == 0.0) return -1.0 / nu;
  return std::expm1(nu * std::log(x)) / nu;
}

double exp_nu(double x, Deformation d) {
  const double nu = d.nu();
  const double base = 1.0 + nu * x;
  if (!(base > 0.0)) {
    throw DomainError("exp_nu: 1 + nu*x = " + fmt(base) + " <= 0 at x=" + fmt(x) + " (undefined)");
  }
  return std::exp(std::log1p(nu * x) / nu);
}

HermMatrix ln_nu_op(const SpectralDecomp& sd, Deformation d) {
  const PsdClass cls = classify_psd(sd.eigenvalues);
  if (!cls.is_psd()) {
    throw DomainError("ln_nu_op: matrix is not positive semidefinite, eigenvalue " +
                      fmt(cls.min_eigenvalue));
  }
  return apply_spectral(
      sd, [d](double x) { return ln_nu(x < 0.0 ? 0.0 : x, d); }, "ln_nu_op");
}

HermMatrix ln_nu_op(const HermMatrix& m, Deformation d) { return ln_nu_op(eig_hermitian(m), d); }

HermMatrix exp_nu_op(const HermMatrix& m, Deformation d) {
  return apply_spectral(m, [d](double x) { return exp_nu(x, d); }, "exp_nu_op");
}

double kantorovich(double nu, double h) {
  if (!(h > 0.0) || !std::isfinite(h)) throw DomainError("kantorovich: h=" + fmt(h) + " must be positive");
  if (h == 1.0) throw DomainError("kantorovich: h must differ from 1");
  if (!std::isfinite(nu)) throw DomainError("kantorovich: nu is not finite");
  if (nu == 0.0 || nu == 1.0) return 1.0;

  const double h_nu = std::pow(h, nu);
  const double h_nu_minus_one = std::expm1(nu * std::log(h));
  const double lead = (h_nu - h) / ((nu - 1.0) * (h - 1.0));
  const double base = (nu - 1.0) / nu * h_nu_minus_one / (h_nu - h);
  if (!(base > 0.0)) {
    throw DomainError("kantorovich: non-positive base at nu=" + fmt(nu) + ", h=" + fmt(h));
  }
  return lead * std::pow(base, nu);
}

double specht(double h) {
  if (!(h > 1.0) || !std::isfinite(h)) throw DomainError("specht: h=" + fmt(h) + " must exceed 1");
  const double e = 1.0 / (h - 1.0);
  const double log_root = e * std::log(h);  // log h^{1/(h-1)}
  return std::exp(log_root) / (std::numbers::e * log_root);
}

SpectralBounds spectral_bounds(const HermMatrix& x, const HermMatrix& y) {
  require_same_dim("spectral_bounds", x, y);
  const SpectralDecomp sx = eig_hermitian(x);
  const SpectralDecomp sy = eig_hermitian(y);
  if (!classify_psd(sx.eigenvalues).is_pd() || !classify_psd(sy.eigenvalues).is_pd()) {
    throw SingularityError("spectral_bounds: both matrices must be positive definite");
  }
  SpectralBounds b;
  b.m1 = sx.eigenvalues.minCoeff();
  b.big_m1 = sx.eigenvalues.maxCoeff();
  b.m2 = sy.eigenvalues.minCoeff();
  b.big_m2 = sy.eigenvalues.maxCoeff();
  b.h = (b.big_m1 * b.big_m2) / (b.m1 * b.m2);
  b.degenerate = !(b.h > 1.0 + 1e-9);
  return b;
}

}  // namespace trineq
