#pragma once

// Deformed logarithm / exponential, their operator lifts, and the spectral
// constants that appear in two-sided entropy estimates.

#include "trineq/matrix.hpp"

namespace trineq {

// Deformation parameter nu in (0, 1].
class Deformation {
 public:
  explicit Deformation(double nu);
  double nu() const { return nu_; }

 private:
  double nu_;
};

// ln_nu(x) = (x^nu - 1) / nu for x >= 0.
double ln_nu(double x, Deformation d);
// exp_nu(x) = (1 + nu x)^{1/nu}; DomainError when 1 + nu x <= 0.
double exp_nu(double x, Deformation d);

// Spectral lifts. ln_nu_op needs M PSD; exp_nu_op needs I + nu M PD. Domain
// failures name the offending eigenvalue.
HermMatrix ln_nu_op(const HermMatrix& m, Deformation d);
HermMatrix ln_nu_op(const SpectralDecomp& sd, Deformation d);
HermMatrix exp_nu_op(const HermMatrix& m, Deformation d);

// Generalized Kantorovich constant
//   K(nu, h) = (h^nu - h) / ((nu - 1)(h - 1)) * ((nu - 1)/nu * (h^nu - 1)/(h^nu - h))^nu
// for real nu and h > 0, h != 1. K(0, h) = K(1, h) = 1 are returned as the
// limit values.
double kantorovich(double nu, double h);

// Specht's ratio S(h) = h^{1/(h-1)} / (e log h^{1/(h-1)}), h > 1.
double specht(double h);

struct SpectralBounds {
  double m1 = 0.0, big_m1 = 0.0;  // spectrum of X lies in [m1, M1]
  double m2 = 0.0, big_m2 = 0.0;  // spectrum of Y lies in [m2, M2]
  double h = 1.0;                 // M1 M2 / (m1 m2)
  // h <= 1 + 1e-9: Kantorovich/Specht consumers must reject.
  bool degenerate = true;
};

SpectralBounds spectral_bounds(const HermMatrix& x, const HermMatrix& y);

}  // namespace trineq
