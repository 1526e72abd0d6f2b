#pragma once

// Independent reference implementations for tests.
//
// Scalar route: inputs are eigenvalue vectors (commuting X, Y) or a diagonal
// state p with arbitrary observables; everything is an explicit sum.
// Eigen route: general Hermitian inputs are diagonalized with Eigen's
// SelfAdjointEigenSolver and matrix functions rebuilt from that.
// Nothing here calls into the library under test.

#include <complex>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

using cd = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = std::vector<double>;

// ---- generators (std::mt19937_64, independent of the library RNG) ----

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : eng_(seed) {}
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(eng_); }
  double normal() { return std::normal_distribution<double>(0.0, 1.0)(eng_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(eng_); }

  Vec positive(int n, double lo = 0.1, double hi = 3.0);
  Vec probabilities(int n, double floor = 0.02);
  Mat gaussian(int n);
  Mat hermitian(int n);
  Mat psd(int n);              // G G* / n
  Mat pd(int n, double shift = 0.05);
  Mat density(int n);
  Mat unitary(int n);          // eigenvectors of a random Hermitian matrix

 private:
  std::mt19937_64 eng_;
};

Mat diag(const Vec& v);

// ---- scalar route ----

double ln_nu(double x, double nu);
double exp_nu(double x, double nu);
double kantorovich(double nu, double h);
double specht(double h);

double tsallis(const Vec& x, const Vec& y, double nu);
double umegaki(const Vec& x, const Vec& y);

double gap_prop22(const Vec& x, const Vec& y, double nu);
double gap_furuta_lower(const Vec& x, const Vec& y, double nu);
double gap_furuta_upper(const Vec& x, const Vec& y, double nu);
double gap_audenaert(const Vec& a, const Vec& b, double s);
double gap_prop23(const Vec& x, const Vec& y, double nu);
double gap_cmp_upper(const Vec& x, const Vec& y, double nu);
double gap_prop31(const Vec& x, const Vec& y, double nu);
double gap_thm32(const Vec& x, const Vec& y, double nu);
double min_eig_op_lb(const Vec& x, const Vec& y, double nu);
double gap_lemma33(const Vec& x, const Vec& y, double nu);
double gap_cmp_lower(const Vec& x, const Vec& y, double nu);
double variational_closed_i(const Vec& a, const Vec& y, double d, double nu);
double variational_objective_i(const Vec& x, const Vec& a, const Vec& y, double nu);
double variational_closed_ii(const Vec& x, const Vec& b, double nu);
double variational_objective_ii(const Vec& a, const Vec& x, const Vec& b, double nu);

// Diagonal state p, arbitrary matrices. f and g act on the entries of p.
using Fn = std::function<double(double)>;
Fn power(double p);
Fn mix(double a);

double expectation(const Vec& p, const Mat& h);
double variance(const Vec& p, const Mat& h);
cd covariance(const Vec& p, const Mat& a, const Mat& b);
cd comm_expectation(const Vec& p, const Mat& a, const Mat& b);  // Tr[rho [A,B]]
cd corr_fg(const Vec& p, const Mat& x, const Mat& y, const Fn& f, const Fn& g);
cd corr_alpha(const Vec& p, const Mat& x, const Mat& y, double alpha);
double skew_fg(const Vec& p, const Mat& h, const Fn& f, const Fn& g);
double wyd_skew(const Vec& p, const Mat& h, double alpha);
// (1/2) sum (sqrt p_i + sqrt p_k)^2 |H0_ik|^2
double j_quantity(const Vec& p, const Mat& h);
double u_quantity(const Vec& p, const Mat& h, double alpha);
// L_t(diag(x), diag(y); H) = sum_ik |H_ik|^2 (x_i - x_i^t y_k^{1-t})
double l_quantity(const Vec& x, const Vec& y, const Mat& h, double t);

// Uncertainty-type gaps (lhs - rhs) keyed by inequality name; alpha is used by
// the alpha-indexed names.
double gap_uncertainty(const std::string& id, const Vec& p, const Mat& a, const Mat& b, double alpha);
double gap_fg(const Vec& p, const Mat& a, const Mat& b, const Fn& f, const Fn& g);

// ---- Eigen route ----

struct Eig {
  Eigen::VectorXd values;
  Mat vectors;
};
Eig eig(const Mat& m);
Mat fn(const Mat& m, const std::function<double(double)>& f);
Mat mpow(const Mat& m, double p);
double re_tr(const Mat& m);

// Rewrites (rho, A, B) in rho's eigenbasis: returns p and transformed A, B.
struct Basis {
  Vec p;
  Mat a, b;
};
Basis to_eigenbasis(const Mat& rho, const Mat& a, const Mat& b);

double tsallis(const Mat& x, const Mat& y, double nu);
double power_mean_trace(const Mat& x, const Mat& y, double nu);
double trace_abs(const Mat& m);

}  // namespace oracle
