#ifndef CUBICS_GROUP_HPP
#define CUBICS_GROUP_HPP

#include <random>

#include "cubics/pair.hpp"

namespace cubics {

/// Element of the non-reductive automorphism group G acting on pairs by
/// (B, A) -> (g1 B g2^-1, g2 A g3^-1), where
///   g2 = [[alpha, 0], [u_i, g]]  on O(-1) + 3O(-2)   (u_i linear forms)
///   g3 = [[beta, 0], [u, gamma]] on O + O(-1).
struct GroupElement {
    QMatrix g1;                // invertible 2x2
    Rational alpha;            // nonzero
    QMatrix g;                 // invertible 3x3
    std::array<Poly, 3> u2;    // linear forms of g2
    Rational beta, gamma;      // nonzero
    Poly u3;                   // linear form of g3

    static GroupElement identity();
    /// Small random integer data; always invertible.
    static GroupElement random(std::mt19937& rng);

    GradedMatrix g2_matrix() const;
    GradedMatrix g2_inverse() const;
    GradedMatrix g3_matrix() const;
    GradedMatrix g3_inverse() const;

    PairBA apply(const PairBA& p) const;
    /// compose(g, h) acts as "h first, then g".
    GroupElement compose(const GroupElement& h) const;

    void validate() const;
};

/// Element of Lie(G): same block shapes with no invertibility constraints.
/// Dimension 4 + 22 + 6 = 32.
struct LieTriple {
    QMatrix R;               // 2x2
    Rational alpha;
    QMatrix S;               // 3x3
    std::array<Poly, 3> u2;  // linear forms
    Rational beta, gamma;
    Poly u3;                 // linear form

    static LieTriple zero();
    GradedMatrix s_matrix() const;  // 4x4 endomorphism block
    GradedMatrix t_matrix() const;  // 2x2 endomorphism block
};

inline constexpr int kLieDim = 32;

/// Coordinates of Lie(G): R (4), alpha (1), S block g (9), u2 (12),
/// beta, gamma (2), u3 (4) in this order.
LieTriple lie_from_coords(const std::vector<Rational>& v);
std::vector<Rational> lie_to_coords(const LieTriple& l);

}  // namespace cubics

#endif
