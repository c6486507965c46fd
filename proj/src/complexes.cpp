#include "cubics/complexes.hpp"

namespace cubics {

const TwistList& cr_b_source() {
    static const TwistList t{-3, -3};
    return t;
}

const TwistList& cr_middle() {
    static const TwistList t{-1, -2, -2, -2};
    return t;
}

const TwistList& cr_target() {
    static const TwistList t{0, -1};
    return t;
}

void validate_cr_shapes(const GradedMatrix& b, const GradedMatrix& a) {
    if (b.source() != cr_b_source() || b.target() != cr_middle())
        throw error("pair: B does not have the resolution shape 2O(-3) -> O(-1)+3O(-2)");
    if (a.source() != cr_middle() || a.target() != cr_target())
        throw error("pair: A does not have the resolution shape O(-1)+3O(-2) -> O+O(-1)");
    b.validate();
    a.validate();
}

bool check_exact_E(const GradedMatrix& b, const GradedMatrix& a, bool strict) {
    validate_cr_shapes(b, a);
    if (!compose(b, a).is_zero()) return false;
    if (rank_of(sections_matrix(b, 3)) != 2) return false;
    if (rank_of(sections_matrix(a, 3)) != 20) return false;
    if (strict) {
        // twist m: H0(2O(-3)(m)) injects and the kernel of the A-sections
        // map is exactly its image
        for (int m : {4, 5}) {
            long bdim = sections_dim(cr_b_source(), m);
            if (rank_of(sections_matrix(b, m)) != bdim) return false;
            long mid = sections_dim(cr_middle(), m);
            if (rank_of(sections_matrix(a, m)) != mid - bdim) return false;
        }
    }
    return true;
}

long hilbert_function(const GradedMatrix& a, int m) {
    if (m < 0) throw error("hilbert_function: negative twist");
    return sections_dim(a.target(), m) - rank_of(sections_matrix(a, m));
}

HilbertPoly hilbert_polynomial(const GradedMatrix& a) {
    long h[7];
    for (int m = 1; m <= 6; ++m) h[m] = hilbert_function(a, m);
    HilbertPoly hp;
    hp.multiplicity = h[2] - h[1];
    hp.constant = h[1] - hp.multiplicity;
    for (int m = 3; m <= 6; ++m)
        if (h[m] != hp.multiplicity * m + hp.constant)
            throw error("hilbert_polynomial: values are not linear (non-exact input?)");
    if (hp.multiplicity < 1) throw error("hilbert_polynomial: nonpositive multiplicity");
    return hp;
}

}  // namespace cubics
