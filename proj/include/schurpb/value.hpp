#pragma once

#include <string>

namespace schurpb {

enum class Method { TruncatedSum, Quadrature, DerivedSeries, TableLookup };

std::string to_string(Method m);

// A floating-point result with an absolute error estimate. Truncation-tail
// contributions to the bound are rigorous; quadrature contributions are
// refinement differences.
struct ValueWithBound {
  double value = 0.0;
  double bound = 0.0;
  Method method = Method::TruncatedSum;
};

}  // namespace schurpb
