#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace qmac {

// All coefficients and counts live in Z with no overflow semantics; the
// binomial weights alone exceed 64 bits at moderate parameters.
using Int = boost::multiprecision::cpp_int;

// A quotient that should have been integral was not.  Every rational weight
// in the series expansions divides exactly, so a remainder means a broken
// transcription and must never be absorbed silently.
class DivisibilityError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

inline Int exact_div(const Int& numerator, const Int& divisor) {
  if (divisor == 0) throw DivisibilityError("exact_div: zero divisor");
  Int q = numerator / divisor;
  if (q * divisor != numerator) {
    throw DivisibilityError("exact_div: " + numerator.str() +
                            " is not divisible by " + divisor.str());
  }
  return q;
}

inline Int int_pow2(int e) {
  if (e < 0) throw std::invalid_argument("int_pow2: negative exponent");
  return Int(1) << e;
}

}  // namespace qmac
