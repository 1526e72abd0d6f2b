#include "trineq/errors.hpp"

#include <sstream>

namespace trineq {

void throw_dimension_mismatch(const char* where, long lhs, long rhs) {
  std::ostringstream os;
  os << where << ": dimension mismatch (" << lhs << " vs " << rhs << ")";
  throw DimensionError(os.str());
}

}  // namespace trineq
