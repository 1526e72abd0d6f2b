#pragma once

// Dense complex Hermitian matrix kernel: eigendecomposition, spectral
// functional calculus, Loewner order tests, power means and commutators.
//
// Every operation here is a pure function of its arguments. HermMatrix is an
// immutable value once constructed.

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>

#include "trineq/errors.hpp"

namespace trineq {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

// Absolute per-entry tolerance for |m(j,k) - conj(m(k,j))|.
inline constexpr double kHermiticityTol = 1e-12;
// Relative PSD tolerance: tau_P = kPsdRelTol * max(1, max |eigenvalue|).
inline constexpr double kPsdRelTol = 1e-10;
// Jacobi stops when the off-diagonal Frobenius mass drops below this
// multiple of the input's Frobenius norm.
inline constexpr double kJacobiRelTol = 1e-14;

struct HermiticityDefect {
  double worst = 0.0;  // max_{j,k} |m(j,k) - conj(m(k,j))|
  Index row = 0;
  Index col = 0;
};

HermiticityDefect hermiticity_defect(const Matrix& m);

class HermMatrix {
 public:
  // Validates squareness, dim >= 1, finite entries and hermiticity within
  // kHermiticityTol. The stored matrix is the exact Hermitian part of the
  // input, so diagonal imaginary residue below tolerance is dropped.
  explicit HermMatrix(const Matrix& m);

  static HermMatrix identity(Index n);
  static HermMatrix zero(Index n);
  static HermMatrix diagonal(std::span<const double> values);
  static HermMatrix diagonal(std::initializer_list<double> values);
  static HermMatrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows);

  // (m + m*) / 2 without a tolerance check. For results that are Hermitian in
  // exact arithmetic (congruences, spectral reconstructions).
  static HermMatrix hermitian_part(const Matrix& m);

  Index dim() const { return m_.rows(); }
  const Matrix& matrix() const { return m_; }
  Complex operator()(Index j, Index k) const { return m_(j, k); }
  double trace() const;
  double max_abs() const;

  friend HermMatrix operator+(const HermMatrix& a, const HermMatrix& b);
  friend HermMatrix operator-(const HermMatrix& a, const HermMatrix& b);
  friend HermMatrix operator-(const HermMatrix& a);
  friend HermMatrix operator*(double s, const HermMatrix& a);
  friend bool operator==(const HermMatrix& a, const HermMatrix& b) { return a.m_ == b.m_; }

 private:
  struct Unchecked {};
  HermMatrix(Matrix m, Unchecked) : m_(std::move(m)) {}

  Matrix m_;
};

struct SpectralDecomp {
  RealVector eigenvalues;  // ascending
  Matrix eigenvectors;     // unitary, column j pairs with eigenvalues[j]

  Index dim() const { return eigenvalues.size(); }
  // U diag(values) U*.
  HermMatrix compose(const RealVector& values) const;
  HermMatrix reconstruct() const { return compose(eigenvalues); }
};

// Cyclic complex Jacobi. Eigenvalues ascending; each eigenvector's first
// component with modulus above 1e-10 is rotated to be real positive, so the
// output is a deterministic function of the input bits.
SpectralDecomp eig_hermitian(const HermMatrix& m);
// Same, for a raw matrix; throws HermiticityError naming the worst entry.
SpectralDecomp eig_hermitian(const Matrix& m);

enum class PsdClassification { positive_definite, positive_semidefinite, indefinite };

std::string_view to_string(PsdClassification c);

struct PsdClass {
  PsdClassification classification = PsdClassification::indefinite;
  double min_eigenvalue = 0.0;
  double tolerance = 0.0;  // the tau_P used

  bool is_psd() const { return classification != PsdClassification::indefinite; }
  bool is_pd() const { return classification == PsdClassification::positive_definite; }
};

double psd_tolerance(const RealVector& eigenvalues);
PsdClass classify_psd(const RealVector& eigenvalues);
PsdClass classify_psd(const HermMatrix& m);

// Applies f to every eigenvalue. A non-finite f(lambda) is reported as a
// DomainError naming the offending eigenvalue; f may also throw DomainError
// itself.
template <class F>
HermMatrix apply_spectral(const SpectralDecomp& sd, F&& f, std::string_view name = "f");

template <class F>
HermMatrix apply_spectral(const HermMatrix& m, F&& f, std::string_view name = "f") {
  return apply_spectral(eig_hermitian(m), std::forward<F>(f), name);
}

[[noreturn]] void throw_spectral_domain(std::string_view name, double eigenvalue);

template <class F>
HermMatrix apply_spectral(const SpectralDecomp& sd, F&& f, std::string_view name) {
  RealVector values(sd.dim());
  for (Index j = 0; j < sd.dim(); ++j) {
    const double lambda = sd.eigenvalues[j];
    const double v = f(lambda);
    if (!std::isfinite(v)) throw_spectral_domain(name, lambda);
    values[j] = v;
  }
  return sd.compose(values);
}

// M^p by the spectral theorem. p > 0 needs M PSD (eigenvalues in
// (-tau_P, 0) are treated as 0, and 0^p = 0); p <= 0 needs M strictly PD.
// frac_power(M, 1) == M and frac_power(M, 0) == I exactly.
HermMatrix frac_power(const HermMatrix& m, double p);
HermMatrix frac_power(const SpectralDecomp& sd, double p);

struct AbsAndPositivePart {
  HermMatrix abs;            // |A| = (A*A)^{1/2}
  HermMatrix positive_part;  // A_+ = (A + |A|) / 2
};

AbsAndPositivePart abs_and_positive_part(const HermMatrix& a);

// S M S, symmetrized.
HermMatrix congruence(const HermMatrix& s, const HermMatrix& m);

// X #_nu Y = X^{1/2} (X^{-1/2} Y X^{-1/2})^nu X^{1/2}; X PD, Y PSD, nu in [0,1].
HermMatrix power_mean(const HermMatrix& x, const HermMatrix& y, double nu);

// Classifies B - A: PSD iff A <= B in the Loewner order.
PsdClass loewner_leq(const HermMatrix& a, const HermMatrix& b);

Matrix commutator(const Matrix& a, const Matrix& b);
Matrix commutator(const HermMatrix& a, const HermMatrix& b);
Matrix anticommutator(const Matrix& a, const Matrix& b);
HermMatrix anticommutator(const HermMatrix& a, const HermMatrix& b);

Complex trace(const Matrix& m);
// Tr[A B] without forming the product.
Complex trace_of_product(const Matrix& a, const Matrix& b);

// Real part of a trace that is real in exact arithmetic. Imaginary residue
// above 1e-9 * max(1, scale) raises InternalConsistencyError.
double checked_real(Complex z, double scale, std::string_view what);

HermMatrix direct_sum(const HermMatrix& a, const HermMatrix& b);

void require_same_dim(const char* where, const Matrix& a, const Matrix& b);
inline void require_same_dim(const char* where, const HermMatrix& a, const HermMatrix& b) {
  require_same_dim(where, a.matrix(), b.matrix());
}

}  // namespace trineq
