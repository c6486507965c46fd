#ifndef CUBICS_COMPLEXES_HPP
#define CUBICS_COMPLEXES_HPP

#include "cubics/graded_matrix.hpp"

namespace cubics {

/// Twists of the common resolution 0 -> 2O(-3) -B-> O(-1)+3O(-2) -A-> O+O(-1).
const TwistList& cr_b_source();  // [-3,-3]
const TwistList& cr_middle();    // [-1,-2,-2,-2]
const TwistList& cr_target();    // [0,-1]

/// B must be 2x4 and A 4x2 in the resolution shape, degree-validated.
void validate_cr_shapes(const GradedMatrix& b, const GradedMatrix& a);

/// Exactness of 0 -> k^2 -> S^2V* + (k^3 x V*) -> S^3V* + S^2V* at twist 3:
/// B*A = 0, rank of the section matrix of B equals 2 and of A equals 20.
/// Strict mode re-checks the rank conditions at twists 4 and 5.
bool check_exact_E(const GradedMatrix& b, const GradedMatrix& a, bool strict = false);

/// Dimension of the cokernel of the induced map on degree-m sections.
long hilbert_function(const GradedMatrix& a, int m);

struct HilbertPoly {
    long multiplicity = 0;
    long constant = 0;
    /// reduced form: the polynomial divided by the multiplicity
    Rational reduced_constant() const { return Rational(constant, multiplicity); }
    bool operator==(const HilbertPoly& o) const = default;
};

/// Fits a linear polynomial through the Hilbert function at m = 1..4 and
/// verifies it at m = 5, 6. Throws when the values are not linear, which
/// signals a non-exact or corrupted presentation.
HilbertPoly hilbert_polynomial(const GradedMatrix& a);

}  // namespace cubics

#endif
