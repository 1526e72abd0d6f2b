#include "trineq/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <vector>

namespace trineq {

namespace {

void require_square(const Matrix& m, const char* where) {
  if (m.rows() != m.cols()) {
    std::ostringstream os;
    os << where << ": matrix is " << m.rows() << "x" << m.cols() << ", expected square";
    throw DimensionError(os.str());
  }
  if (m.rows() < 1) throw DimensionError(std::string(where) + ": empty matrix");
}

void require_finite(const Matrix& m, const char* where) {
  for (Index j = 0; j < m.rows(); ++j) {
    for (Index k = 0; k < m.cols(); ++k) {
      const Complex z = m(j, k);
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        std::ostringstream os;
        os << where << ": non-finite entry at (" << j << "," << k << ")";
        throw DomainError(os.str());
      }
    }
  }
}

Matrix symmetrize(const Matrix& m) {
  Matrix h = 0.5 * (m + m.adjoint());
  for (Index j = 0; j < h.rows(); ++j) h(j, j) = Complex(h(j, j).real(), 0.0);
  return h;
}

// One sweep-ordered pass of complex Jacobi rotations over all (p, q), p < q.
// The rotation J restricted to (p, q) is
//   [ c            s e^{i phi} ]
//   [ -s e^{-i phi}     c      ],  a_pq = |a_pq| e^{i phi},
// and A <- J* A J annihilates a_pq.
void jacobi_rotate(Matrix& a, Matrix& v, Index p, Index q) {
  const Complex apq = a(p, q);
  const double mag = std::abs(apq);
  if (mag == 0.0) return;

  const double app = a(p, p).real();
  const double aqq = a(q, q).real();
  const double theta = (aqq - app) / (2.0 * mag);
  double t;
  if (std::abs(theta) > 1e150) {
    t = 0.5 / theta;
  } else {
    t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  }
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;
  const Complex phase = apq / mag;

  const Complex jpp = c;
  const Complex jpq = s * phase;
  const Complex jqp = -s * std::conj(phase);
  const Complex jqq = c;

  const Index n = a.rows();
  for (Index k = 0; k < n; ++k) {
    const Complex akp = a(k, p);
    const Complex akq = a(k, q);
    a(k, p) = akp * jpp + akq * jqp;
    a(k, q) = akp * jpq + akq * jqq;
  }
  for (Index k = 0; k < n; ++k) {
    const Complex apk = a(p, k);
    const Complex aqk = a(q, k);
    a(p, k) = std::conj(jpp) * apk + std::conj(jqp) * aqk;
    a(q, k) = std::conj(jpq) * apk + std::conj(jqq) * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = a(p, p).real();
  a(q, q) = a(q, q).real();

  for (Index k = 0; k < n; ++k) {
    const Complex vkp = v(k, p);
    const Complex vkq = v(k, q);
    v(k, p) = vkp * jpp + vkq * jqp;
    v(k, q) = vkp * jpq + vkq * jqq;
  }
}

double off_diagonal_norm(const Matrix& a) {
  double sum = 0.0;
  for (Index j = 0; j < a.rows(); ++j)
    for (Index k = 0; k < a.cols(); ++k)
      if (j != k) sum += std::norm(a(j, k));
  return std::sqrt(sum);
}

SpectralDecomp jacobi(const Matrix& input) {
  const Index n = input.rows();
  Matrix a = input;
  Matrix v = Matrix::Identity(n, n);

  const double threshold = kJacobiRelTol * input.norm();
  constexpr int kMaxSweeps = 100;
  double off = off_diagonal_norm(a);
  for (int sweep = 0; sweep < kMaxSweeps && off > threshold; ++sweep) {
    for (Index p = 0; p < n - 1; ++p)
      for (Index q = p + 1; q < n; ++q) jacobi_rotate(a, v, p, q);
    const double next = off_diagonal_norm(a);
    // Roundoff floor reached: further sweeps cannot reduce the mass.
    if (next >= off && next <= 1e3 * threshold) break;
    off = next;
  }
  if (off_diagonal_norm(a) > 1e3 * threshold) {
    throw InternalConsistencyError("eig_hermitian: Jacobi iteration did not converge");
  }

  std::vector<Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Index i, Index j) { return a(i, i).real() < a(j, j).real(); });

  SpectralDecomp sd;
  sd.eigenvalues.resize(n);
  sd.eigenvectors.resize(n, n);
  for (Index j = 0; j < n; ++j) {
    const Index src = order[static_cast<std::size_t>(j)];
    sd.eigenvalues[j] = a(src, src).real();
    auto col = sd.eigenvectors.col(j);
    col = v.col(src);
    for (Index k = 0; k < n; ++k) {
      const double mod = std::abs(col[k]);
      if (mod > 1e-10) {
        const Complex rot = std::conj(col[k]) / mod;
        if (rot != Complex(1.0, 0.0)) {
          col *= rot;
          col[k] = Complex(col[k].real(), 0.0);
        }
        break;
      }
    }
  }
  return sd;
}

}  // namespace

HermiticityDefect hermiticity_defect(const Matrix& m) {
  HermiticityDefect d;
  for (Index j = 0; j < m.rows(); ++j) {
    for (Index k = j; k < m.cols(); ++k) {
      const double dev = std::abs(m(j, k) - std::conj(m(k, j)));
      if (dev > d.worst) d = {dev, j, k};
    }
  }
  return d;
}

HermMatrix::HermMatrix(const Matrix& m) {
  require_square(m, "HermMatrix");
  require_finite(m, "HermMatrix");
  const HermiticityDefect d = hermiticity_defect(m);
  if (d.worst > kHermiticityTol) {
    std::ostringstream os;
    os.precision(6);
    os << "matrix is not Hermitian: worst entry (" << d.row << "," << d.col
       << ") deviates from the conjugate of (" << d.col << "," << d.row << ") by " << d.worst
       << " (tolerance " << kHermiticityTol << ")";
    throw HermiticityError(os.str());
  }
  m_ = symmetrize(m);
}

HermMatrix HermMatrix::identity(Index n) {
  if (n < 1) throw DimensionError("identity: dimension must be positive");
  return HermMatrix(Matrix::Identity(n, n), Unchecked{});
}

HermMatrix HermMatrix::zero(Index n) {
  if (n < 1) throw DimensionError("zero: dimension must be positive");
  return HermMatrix(Matrix::Zero(n, n), Unchecked{});
}

HermMatrix HermMatrix::diagonal(std::span<const double> values) {
  const auto n = static_cast<Index>(values.size());
  if (n < 1) throw DimensionError("diagonal: no entries");
  Matrix m = Matrix::Zero(n, n);
  for (Index j = 0; j < n; ++j) m(j, j) = values[static_cast<std::size_t>(j)];
  require_finite(m, "diagonal");
  return HermMatrix(std::move(m), Unchecked{});
}

HermMatrix HermMatrix::diagonal(std::initializer_list<double> values) {
  return diagonal(std::span<const double>(values.begin(), values.size()));
}

HermMatrix HermMatrix::from_rows(std::initializer_list<std::initializer_list<Complex>> rows) {
  const auto n = static_cast<Index>(rows.size());
  Matrix m(n, n);
  Index j = 0;
  for (const auto& row : rows) {
    if (static_cast<Index>(row.size()) != n) throw_dimension_mismatch("from_rows", n, static_cast<long>(row.size()));
    Index k = 0;
    for (const Complex& z : row) m(j, k++) = z;
    ++j;
  }
  return HermMatrix(m);
}

HermMatrix HermMatrix::hermitian_part(const Matrix& m) {
  require_square(m, "hermitian_part");
  return HermMatrix(symmetrize(m), Unchecked{});
}

double HermMatrix::trace() const { return m_.trace().real(); }

double HermMatrix::max_abs() const { return m_.cwiseAbs().maxCoeff(); }

HermMatrix operator+(const HermMatrix& a, const HermMatrix& b) {
  require_same_dim("operator+", a, b);
  return HermMatrix(a.m_ + b.m_, HermMatrix::Unchecked{});
}

HermMatrix operator-(const HermMatrix& a, const HermMatrix& b) {
  require_same_dim("operator-", a, b);
  return HermMatrix(a.m_ - b.m_, HermMatrix::Unchecked{});
}

HermMatrix operator-(const HermMatrix& a) { return HermMatrix(-a.m_, HermMatrix::Unchecked{}); }

HermMatrix operator*(double s, const HermMatrix& a) {
  return HermMatrix(s * a.m_, HermMatrix::Unchecked{});
}

HermMatrix SpectralDecomp::compose(const RealVector& values) const {
  const Matrix& u = eigenvectors;
  return HermMatrix::hermitian_part(u * values.cast<Complex>().asDiagonal() * u.adjoint());
}

SpectralDecomp eig_hermitian(const HermMatrix& m) { return jacobi(m.matrix()); }

SpectralDecomp eig_hermitian(const Matrix& m) { return jacobi(HermMatrix(m).matrix()); }

std::string_view to_string(PsdClassification c) {
  switch (c) {
    case PsdClassification::positive_definite: return "positive_definite";
    case PsdClassification::positive_semidefinite: return "positive_semidefinite";
    case PsdClassification::indefinite: return "indefinite";
  }
  return "?";
}

double psd_tolerance(const RealVector& eigenvalues) {
  const double largest = eigenvalues.size() ? eigenvalues.cwiseAbs().maxCoeff() : 0.0;
  return kPsdRelTol * std::max(1.0, largest);
}

PsdClass classify_psd(const RealVector& eigenvalues) {
  PsdClass out;
  out.tolerance = psd_tolerance(eigenvalues);
  out.min_eigenvalue = eigenvalues.minCoeff();
  if (out.min_eigenvalue > out.tolerance) {
    out.classification = PsdClassification::positive_definite;
  } else if (out.min_eigenvalue >= -out.tolerance) {
    out.classification = PsdClassification::positive_semidefinite;
  } else {
    out.classification = PsdClassification::indefinite;
  }
  return out;
}

PsdClass classify_psd(const HermMatrix& m) { return classify_psd(eig_hermitian(m).eigenvalues); }

void throw_spectral_domain(std::string_view name, double eigenvalue) {
  std::ostringstream os;
  os.precision(17);
  os << name << ": eigenvalue " << eigenvalue << " lies outside the function's domain";
  throw DomainError(os.str());
}

HermMatrix frac_power(const SpectralDecomp& sd, double p) {
  if (!std::isfinite(p)) throw DomainError("frac_power: exponent is not finite");
  const PsdClass cls = classify_psd(sd.eigenvalues);
  if (p > 0.0) {
    if (!cls.is_psd()) {
      std::ostringstream os;
      os.precision(17);
      os << "frac_power: exponent " << p << " needs a positive semidefinite matrix, min eigenvalue "
         << cls.min_eigenvalue;
      throw DomainError(os.str());
    }
  } else if (!cls.is_pd()) {
    std::ostringstream os;
    os.precision(17);
    os << "frac_power: exponent " << p << " needs a positive definite matrix, min eigenvalue "
       << cls.min_eigenvalue << " <= " << cls.tolerance;
    throw SingularityError(os.str());
  }
  if (p == 1.0) return sd.reconstruct();
  if (p == 0.0) return HermMatrix::identity(sd.dim());
  return apply_spectral(
      sd, [p, tol = cls.tolerance](double x) { return x < tol ? 0.0 : std::pow(x, p); }, "frac_power");
}

HermMatrix frac_power(const HermMatrix& m, double p) {
  if (p == 1.0) {
    if (!classify_psd(m).is_psd()) return frac_power(eig_hermitian(m), p);  // throws
    return m;
  }
  return frac_power(eig_hermitian(m), p);
}

AbsAndPositivePart abs_and_positive_part(const HermMatrix& a) {
  const SpectralDecomp sd = eig_hermitian(a);
  HermMatrix abs = apply_spectral(sd, [](double x) { return std::abs(x); }, "abs");
  HermMatrix pos = 0.5 * (a + abs);
  return {std::move(abs), std::move(pos)};
}

HermMatrix congruence(const HermMatrix& s, const HermMatrix& m) {
  require_same_dim("congruence", s, m);
  return HermMatrix::hermitian_part(s.matrix() * m.matrix() * s.matrix());
}

HermMatrix power_mean(const HermMatrix& x, const HermMatrix& y, double nu) {
  require_same_dim("power_mean", x, y);
  if (!(nu >= 0.0 && nu <= 1.0)) throw DomainError("power_mean: nu must lie in [0,1]");
  const SpectralDecomp sx = eig_hermitian(x);
  if (!classify_psd(sx.eigenvalues).is_pd()) {
    throw SingularityError("power_mean: X must be positive definite");
  }
  if (!classify_psd(y).is_psd()) throw DomainError("power_mean: Y must be positive semidefinite");
  if (nu == 0.0) return x;
  if (nu == 1.0) return y;
  const HermMatrix x_half = frac_power(sx, 0.5);
  const HermMatrix x_inv_half = frac_power(sx, -0.5);
  const HermMatrix inner = frac_power(congruence(x_inv_half, y), nu);
  return congruence(x_half, inner);
}

PsdClass loewner_leq(const HermMatrix& a, const HermMatrix& b) {
  require_same_dim("loewner_leq", a, b);
  return classify_psd(b - a);
}

Matrix commutator(const Matrix& a, const Matrix& b) {
  require_same_dim("commutator", a, b);
  return a * b - b * a;
}

Matrix commutator(const HermMatrix& a, const HermMatrix& b) {
  return commutator(a.matrix(), b.matrix());
}

Matrix anticommutator(const Matrix& a, const Matrix& b) {
  require_same_dim("anticommutator", a, b);
  return a * b + b * a;
}

HermMatrix anticommutator(const HermMatrix& a, const HermMatrix& b) {
  return HermMatrix::hermitian_part(anticommutator(a.matrix(), b.matrix()));
}

Complex trace(const Matrix& m) { return m.trace(); }

Complex trace_of_product(const Matrix& a, const Matrix& b) {
  require_same_dim("trace_of_product", a, b);
  Complex sum = 0.0;
  for (Index j = 0; j < a.rows(); ++j)
    for (Index k = 0; k < a.cols(); ++k) sum += a(j, k) * b(k, j);
  return sum;
}

double checked_real(Complex z, double scale, std::string_view what) {
  const double limit = 1e-9 * std::max(1.0, std::abs(scale));
  if (std::abs(z.imag()) > limit) {
    std::ostringstream os;
    os.precision(6);
    os << what << ": imaginary residue " << z.imag() << " exceeds " << limit
       << " on an expression that is real in exact arithmetic";
    throw InternalConsistencyError(os.str());
  }
  return z.real();
}

HermMatrix direct_sum(const HermMatrix& a, const HermMatrix& b) {
  const Index n = a.dim() + b.dim();
  Matrix m = Matrix::Zero(n, n);
  m.topLeftCorner(a.dim(), a.dim()) = a.matrix();
  m.bottomRightCorner(b.dim(), b.dim()) = b.matrix();
  return HermMatrix::hermitian_part(m);
}

void require_same_dim(const char* where, const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw_dimension_mismatch(where, static_cast<long>(a.rows()), static_cast<long>(b.rows()));
  }
}

}  // namespace trineq
