#pragma once

// Information quantities over Hermitian matrices: Tsallis and Umegaki
// relative entropies, variance/covariance, skew informations, correlation
// measures and the two-parameter quantity L_t(X, Y; H).

#include <string>

#include "trineq/deformed.hpp"
#include "trineq/matrix.hpp"

namespace trineq {

// PSD within tau_P, trace 1 within 1e-12.
class DensityMatrix {
 public:
  explicit DensityMatrix(HermMatrix m);
  const HermMatrix& matrix() const { return m_; }
  Index dim() const { return m_.dim(); }

 private:
  HermMatrix m_;
};

class Observable {
 public:
  explicit Observable(HermMatrix m) : m_(std::move(m)) {}
  const HermMatrix& matrix() const { return m_; }
  Index dim() const { return m_.dim(); }

 private:
  HermMatrix m_;
};

// Closed catalogue of operator monotone functions on [0, inf):
//   power(p)(x) = x^p,                 p in [0, 1]
//   mix(a)(x)   = (x^a + x^{1-a}) / 2, a in [0, 1]
// Both are nondecreasing, so any two of them form a monotonic pair.
class ScalarFnSpec {
 public:
  enum class Kind { power, mix };

  static ScalarFnSpec power(double p);
  static ScalarFnSpec mix(double alpha);
  // "power:0.3" / "mix:0.5"
  static ScalarFnSpec parse(const std::string& text);

  Kind kind() const { return kind_; }
  double param() const { return param_; }
  double operator()(double x) const;
  std::string name() const;
  // f(rho) via frac_power, so singular rho with a zero exponent is a
  // SingularityError.
  HermMatrix apply(const HermMatrix& rho) const;

 private:
  ScalarFnSpec(Kind k, double p) : kind_(k), param_(p) {}
  Kind kind_;
  double param_;
};

// D_nu(X|Y) = Tr[X - X^{1-nu} Y^nu] / nu.
double tsallis_rel_entropy(const HermMatrix& x, const HermMatrix& y, Deformation nu);
// U(X|Y) = Tr[X (log X - log Y)], X and Y PD.
double umegaki_rel_entropy(const HermMatrix& x, const HermMatrix& y);
// X^{1/2} ln_nu(X^{-1/2} Y X^{-1/2}) X^{1/2}, X PD.
HermMatrix tsallis_rel_operator_entropy(const HermMatrix& x, const HermMatrix& y, Deformation nu);

// V_rho(H) = Tr[rho H^2] - Tr[rho H]^2.
double variance(const DensityMatrix& rho, const Observable& h);
// Tr[rho (H - Tr[rho H] I)^2].
double variance_centered(const DensityMatrix& rho, const Observable& h);
// Cov_rho(A,B) = Tr[rho A B] - Tr[rho A] Tr[rho B].
Complex covariance(const DensityMatrix& rho, const Observable& a, const Observable& b);
// Tr[rho (A - <A>) (B - <B>)].
Complex covariance_centered(const DensityMatrix& rho, const Observable& a, const Observable& b);

// I_rho(H) = Tr[rho H^2] - Tr[rho^{1/2} H rho^{1/2} H].
double wy_skew(const DensityMatrix& rho, const Observable& h);
// (1/2) Tr[(i[rho^{1/2}, H0])^2], H0 = H - Tr[rho H] I.
double wy_skew_commutator_form(const DensityMatrix& rho, const Observable& h);

// I_{rho,alpha}(H) = Tr[rho H^2] - Tr[rho^alpha H rho^{1-alpha} H].
double wyd_skew(const DensityMatrix& rho, const Observable& h, double alpha);
double wyd_skew_commutator_form(const DensityMatrix& rho, const Observable& h, double alpha);

// Sign convention for J_rho(H). The consistent form (1/2) Tr[{rho^{1/2}, H0}^2]
// satisfies V = (I + J)/2 and U = sqrt(I J); the literal form keeps the factor
// i inside the square and is its negative.
enum class JConvention { consistent, literal };

double j_quantity(const DensityMatrix& rho, const Observable& h,
                  JConvention convention = JConvention::consistent);
// U_rho(H) = sqrt(V^2 - (V - I_rho(H))^2).
double u_quantity(const DensityMatrix& rho, const Observable& h);
// U_{rho,alpha}(H) = sqrt(V^2 - (V - I_{rho,alpha}(H))^2).
double u_quantity_alpha(const DensityMatrix& rho, const Observable& h, double alpha);

// Corr_rho(X,Y) = Tr[rho X* Y] - Tr[rho^{1/2} X* rho^{1/2} Y]; X, Y arbitrary.
Complex corr(const DensityMatrix& rho, const Matrix& x, const Matrix& y);
// Corr_{rho,alpha}(X,Y) = Tr[rho X* Y] - Tr[rho^alpha X* rho^{1-alpha} Y].
Complex corr_alpha(const DensityMatrix& rho, const Matrix& x, const Matrix& y, double alpha);
// Corr_{rho,(f,g)}(X,Y) = Tr[f(rho) g(rho) X* Y] - Tr[f(rho) X* g(rho) Y].
Complex fg_corr(const DensityMatrix& rho, const Matrix& x, const Matrix& y, const ScalarFnSpec& f,
                const ScalarFnSpec& g);

// I_{rho,(f,g)}(H) = Tr[f(rho) g(rho) H^2] - Tr[f(rho) H g(rho) H].
double fg_skew(const DensityMatrix& rho, const Observable& h, const ScalarFnSpec& f,
               const ScalarFnSpec& g);
// (1/2) Tr[(i[f(rho), H0])(i[g(rho), H0])].
double fg_skew_commutator_form(const DensityMatrix& rho, const Observable& h, const ScalarFnSpec& f,
                               const ScalarFnSpec& g);

// K_{rho,alpha}(H) and Corr^{(K)}_{rho,alpha}: the (f,g) forms with
// f = g = mix(alpha).
double k_skew(const DensityMatrix& rho, const Observable& h, double alpha);
Complex corr_k(const DensityMatrix& rho, const Matrix& x, const Matrix& y, double alpha);

// L_t(X,Y;H) = Tr[X H^2] - Tr[X^t H Y^{1-t} H], t in [0,1].
double l_quantity(const HermMatrix& x, const HermMatrix& y, const Observable& h, double t);

// Tr[rho H] for an observable.
double expectation(const DensityMatrix& rho, const Observable& h);

}  // namespace trineq
