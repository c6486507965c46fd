#ifndef CUBICS_MODULI_HPP
#define CUBICS_MODULI_HPP

#include <optional>

#include "cubics/group.hpp"

namespace cubics {

enum class Stratum { NonPlanar, PlanarNonSingular, PlanarSingular };

const char* stratum_name(Stratum s);

/// Data of a planar normal form: the plane w, the forms l1, l2, the
/// quadrics q1, q2 and the distinguished point cut out by w = l1 = l2 = 0.
struct PlanarData {
    Poly w, l1, l2, q1, q2;
    std::array<Rational, 4> point;
};

struct SheafClass {
    Stratum stratum;
    std::optional<PlanarData> planar;  // present for the planar strata
};

struct NormalFormResult {
    PairBA pair;
    GroupElement witness;  // witness.apply(input) == pair, re-verified
    Stratum stratum;
    std::optional<PlanarData> planar;   // lambda = 0 branch
    std::array<Poly, 3> nonplanar_q;    // lambda != 0 branch
};

/// Reduce a stable pair to one of the two printed normal forms by staged
/// exact linear solves. Throws on reduction failure, which signals a
/// non-exact or unstable input.
NormalFormResult normal_form(const PairBA& p);

/// NonPlanar iff lambda != 0; otherwise reduces to the planar normal form
/// and distinguishes singular sheaves by evaluating both quadrics at the
/// distinguished point.
SheafClass classify(const PairBA& p);

/// Both quadrics vanish at the point cut out by w = l1 = l2 = 0.
/// Errors when called on a non-planar pair.
bool is_singular_planar(const PairBA& p);

/// The six 2x2 minors of A, ordered lexicographically by row pair
/// (1,2), (1,3), (1,4), (2,3), (2,4), (3,4).
struct FittingIdeal {
    std::array<Poly, 6> minors;
    std::vector<Poly> nonzero() const;
};

FittingIdeal fitting_ideal(const GradedMatrix& a);

/// The map of the planar parameter space: matrix (q1 l1; q2 l2) to the
/// cubic f = q1 l2 - q2 l1 and the point p with l1(p) = l2(p) = 0.
/// All inputs live in x0, x1, x2. Errors: dependent linear forms; f = 0.
struct GammaImage {
    Poly cubic;
    std::array<Rational, 3> point;
};

GammaImage gamma_map(const Poly& q1, const Poly& l1, const Poly& q2, const Poly& l2);

}  // namespace cubics

#endif
