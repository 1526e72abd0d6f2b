#pragma once

#include <algorithm>
#include <cmath>
#include <string>

#include "oracle.hpp"
#include "trineq/matrix.hpp"
#include "trineq/quantities.hpp"

namespace testing_support {

inline trineq::HermMatrix herm(const oracle::Mat& m) { return trineq::HermMatrix::hermitian_part(m); }
inline trineq::HermMatrix diag(const oracle::Vec& v) { return trineq::HermMatrix::diagonal(v); }
inline trineq::DensityMatrix density(const oracle::Vec& p) { return trineq::DensityMatrix(diag(p)); }
inline trineq::DensityMatrix density(const oracle::Mat& m) { return trineq::DensityMatrix(herm(m)); }
inline trineq::Observable observable(const oracle::Mat& m) { return trineq::Observable(herm(m)); }

inline double max_abs_diff(const oracle::Mat& a, const oracle::Mat& b) {
  return (a - b).cwiseAbs().maxCoeff();
}
inline double max_abs_diff(const trineq::HermMatrix& a, const oracle::Mat& b) {
  return max_abs_diff(a.matrix(), b);
}

inline double rel_err(double got, double want) {
  return std::abs(got - want) / std::max(1.0, std::abs(want));
}

inline std::string data_file(const std::string& name) { return std::string(TRINEQ_DATA_DIR) + "/" + name; }

}  // namespace testing_support
