#ifndef CUBICS_TANGENT_HPP
#define CUBICS_TANGENT_HPP

#include "cubics/nets.hpp"

namespace cubics {

/// Coordinates on the 91-dimensional space of pair directions (B1, A1):
/// B1 first, row-major, each entry's coefficients over the graded-lex
/// monomial basis of its degree (2,1,1,1 per row: 44 coordinates), then A1
/// (degrees (1,0) in the first row, (2,1) below: 47 coordinates).
inline constexpr int kAmbientDim = 91;
/// Index of the single degree-0 coordinate, A1's lambda entry.
inline constexpr int kLambdaCoord = 48;

struct PairDirection {
    GradedMatrix B1, A1;  // resolution shapes
};

PairDirection ambient_to_direction(const std::vector<Rational>& v);
std::vector<Rational> direction_to_ambient(const PairDirection& d);

/// Matrix of (B1, A1) -> B1 A0 + B0 A1 into the 60 coefficients of the
/// product (two cubic entries, two quadratic entries).
QMatrix tangent_map_matrix(const PairBA& p);

/// Matrix of Lie(G) -> pair directions, (R,S,T) -> (R B0 - B0 S, S A0 - A0 T),
/// one column per Lie coordinate (91 x 32).
QMatrix orbit_map_matrix(const PairBA& p);

struct TangentSpace {
    long dim = 0;
    std::vector<std::vector<Rational>> basis;
};

/// Kernel of the linearized complex condition at a stable exact pair.
TangentSpace tangent_space_X(const PairBA& p);

/// Image of Lie(G); dimension equals 32 minus the stabilizer dimension.
TangentSpace orbit_tangent(const PairBA& p);

long stabilizer_dim(const PairBA& p);

/// dim T_p X - dim T_p(orbit); equals 12, 13, 14 by stratum.
long tangent_dim_M(const PairBA& p);

struct TangentReport {
    Stratum stratum;
    long dim_tx = 0, dim_orbit = 0, dim_stab = 0, dim_moduli = 0;
    std::vector<std::vector<Rational>> tx_basis;     // ambient coordinates
    std::vector<std::vector<Rational>> orbit_basis;  // ambient coordinates
    std::vector<std::vector<Rational>> stab_basis;   // Lie coordinates
};

/// Full report with the internal consistency checks: the orbit lies inside
/// the tangent space and dim_orbit + dim_stab = 32.
TangentReport tangent_report(const PairBA& p);

struct NetTangent {
    long dim_fq = 0;        // image of (S,R) -> S Q - Q R
    long dim_tq_prime = 0;  // the explicit 5-dimensional slice
    long dim_intersection = 0;
    long dim_tn = 0;  // 24 - dim_fq
};

/// Tangent computation at a degenerate net in normal form ((l1,w,0),(l2,0,w));
/// l3 must complete w, l1, l2 to a basis. Returns (12, 5, 0).
NetTangent net_tangent_check(const NetQ& q, const Poly& l3);

}  // namespace cubics

#endif
