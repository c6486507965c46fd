#ifndef CUBICS_PAIR_HPP
#define CUBICS_PAIR_HPP

#include <array>

#include "cubics/complexes.hpp"

namespace cubics {

/// A point (B, A) of the parameter space: matrices of the common resolution,
/// shape- and degree-validated on construction.
struct PairBA {
    GradedMatrix B, A;

    PairBA() = default;
    PairBA(GradedMatrix b, GradedMatrix a);

    /// The degree-0 entry of A (row 1, column 2).
    Rational lambda() const;
    /// The degree-1 entries z1, z2, z3 of A's second column.
    std::array<Poly, 3> zcol() const;
    /// The degree-1 entry of A's first column (row 1).
    Poly zform() const { return A.at(0, 0); }

    bool operator==(const PairBA& o) const = default;
};

/// lambda != 0 or z1, z2, z3 linearly independent.
bool is_pair_stable(const GradedMatrix& a);
inline bool is_pair_stable(const PairBA& p) { return is_pair_stable(p.A); }

/// The planar normal form
///   B = (-q1 -l1 w 0; -q2 -l2 0 w),  A = (w 0; 0 w; q1 l1; q2 l2).
PairBA planar_normal_pair(const Poly& w, const Poly& l1, const Poly& l2, const Poly& q1,
                          const Poly& q2);

/// Signed 2x2 minors of B's linear 2x3 block, in the order and with the
/// signs under which the twisted-cubic fixture satisfies q_i = minor_i:
/// (+m23, -m13, +m12) for column pairs numbered from 1.
std::array<Poly, 3> b_signed_minors(const GradedMatrix& b);

/// The non-planar normal form B = (0 | L), A = (0 1; q 0) with the
/// quadrics equal to the signed minors of the linear block L.
PairBA nonplanar_normal_pair(const std::array<std::array<Poly, 3>, 2>& lin);

inline bool check_exact_E(const PairBA& p, bool strict = false) {
    return check_exact_E(p.B, p.A, strict);
}

/// Canonical fixtures. TC: structure sheaf of the twisted cubic. PS: planar
/// non-singular sheaf on the cubic x2*(x0^2-x1^2) in the plane x3 = 0.
/// PN: planar singular sheaf on a nodal cubic, both quadrics vanishing at
/// the distinguished point (1:0:0:0).
const PairBA& fix_tc();
const PairBA& fix_ps();
const PairBA& fix_pn();

}  // namespace cubics

#endif
