#ifndef CUBICS_RATIONAL_HPP
#define CUBICS_RATIONAL_HPP

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace cubics {

// Exact arithmetic throughout: arbitrary-precision integers and canonical
// rationals (reduced, positive denominator) provided by GMP.
using Integer = mpz_class;
using Rational = mpq_class;

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Parse "3", "-2/5". Throws on malformed input or zero denominator.
Rational rational_from_string(const std::string& s);

/// Canonical form: "3", "-2/5"; integers print without "/1".
std::string to_string(const Rational& r);

inline Rational rat(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

}  // namespace cubics

#endif
