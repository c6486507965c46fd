#ifndef CUBICS_TESTS_GENERATORS_HPP
#define CUBICS_TESTS_GENERATORS_HPP

#include <random>

#include "cubics/moduli.hpp"
#include "cubics/nets.hpp"
#include "oracles.hpp"

namespace cubics::testing {

// Random stable exact pairs, one generator per stratum. Construction starts
// from random normal-form data (retrying until exact) and optionally moves
// the pair by a random group element to leave normal-form position.

inline PairBA random_nonplanar_pair(std::mt19937& rng) {
    for (int tries = 0; tries < 200; ++tries) {
        std::array<std::array<Poly, 3>, 2> lin;
        for (auto& row : lin)
            for (auto& e : row) e = random_form(rng, 1, -2, 2);
        PairBA p = nonplanar_normal_pair(lin);
        if (!is_pair_stable(p)) continue;
        if (!check_exact_E(p)) continue;
        if (classify(p).stratum != Stratum::NonPlanar) continue;
        return p;
    }
    throw error("random_nonplanar_pair: no exact pair found");
}

inline PairBA random_planar_pair(std::mt19937& rng, bool singular) {
    for (int tries = 0; tries < 200; ++tries) {
        Poly w = random_form(rng, 1, -2, 2), l1 = random_form(rng, 1, -2, 2), l2 = random_form(rng, 1, -2, 2);
        if (w.is_zero() || l1.is_zero() || l2.is_zero()) continue;
        if (wedge_rank({w, l1, l2}) != 3) continue;
        Poly q1, q2;
        if (singular) {
            q1 = random_form(rng, 1, -2, 2) * l1 + random_form(rng, 1, -2, 2) * l2;
            q2 = random_form(rng, 1, -2, 2) * l1 + random_form(rng, 1, -2, 2) * l2;
        } else {
            q1 = random_form(rng, 2, -2, 2);
            q2 = random_form(rng, 2, -2, 2);
        }
        if ((q1 * l2 - q2 * l1).is_zero()) continue;
        PairBA p = planar_normal_pair(w, l1, l2, q1, q2);
        if (!is_pair_stable(p)) continue;
        if (!check_exact_E(p)) continue;
        auto cls = classify(p);
        if (singular && cls.stratum != Stratum::PlanarSingular) continue;
        if (!singular && cls.stratum != Stratum::PlanarNonSingular) continue;
        return p;
    }
    throw error("random_planar_pair: no exact pair found");
}

inline PairBA random_pair_in_stratum(std::mt19937& rng, Stratum s, bool move_by_group = true) {
    PairBA p = s == Stratum::NonPlanar ? random_nonplanar_pair(rng)
                                       : random_planar_pair(rng, s == Stratum::PlanarSingular);
    if (move_by_group) p = GroupElement::random(rng).apply(p);
    return p;
}

}  // namespace cubics::testing

#endif
