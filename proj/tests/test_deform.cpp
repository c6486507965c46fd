#include "cubics/deform.hpp"

#include <random>

#include "cubics/io.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace cubics;

namespace {
Poly P(const std::string& s) { return parse_poly(s); }
}

TEST_CASE("build_family from the nodal fixture data") {
    const auto& fam = fix_pn_family();
    CHECK(fam.q1 == P("x0*x2"));
    CHECK(fam.q2 == P("x1^2+x0*x1"));
    CHECK(fam.B0 == fix_pn().B);
    CHECK(fam.A0 == fix_pn().A);
    CHECK(fam.A1.at(0, 0).is_zero());
    CHECK(fam.A1.at(0, 1) == P("1"));
    CHECK(fam.A1.at(1, 0) == P("x0^2+x0*x1"));
    CHECK(fam.A1.at(2, 0).is_zero());
    CHECK(fam.A1.at(3, 0).is_zero());
}

TEST_CASE("build_family corner data") {
    auto zero = build_family(P("x3"), P("x1"), P("x2"), Poly(), Poly(), Poly(), Poly());
    CHECK(zero.A1.at(0, 1) == P("1"));
    CHECK(zero.A1.at(0, 0).is_zero());
    CHECK(zero.A1.at(1, 0).is_zero());

    auto twice = build_family(P("x3"), P("x1"), P("x2"), P("x0"), Poly(), Poly(), P("x0"));
    CHECK(twice.A1.at(0, 0) == P("2*x0"));

    CHECK_THROWS_AS(build_family(P("x3"), P("x1"), P("x1+x3"), Poly(), Poly(), Poly(), Poly()), error);
}

TEST_CASE("family complex identity and exactness at samples") {
    auto rep = verify_family_complex(fix_pn_family());
    CHECK(rep.complex_identity);
    CHECK(rep.exact_at_samples);
    CHECK(rep.ok());
}

TEST_CASE("breaking the coherence between the deformation matrices and the base") {
    // deformation matrices built from b1 + x3 paired with the base matrices
    // of the original data: the product picks up a residual term
    const auto& good = fix_pn_family();
    auto other = build_family(good.w, good.l1, good.l2, good.a1, good.b1 + P("x3"), good.a2, good.b2);
    DeformationFamily mixed = good;
    mixed.B1 = other.B1;
    mixed.A1 = other.A1;
    mixed.Bt = mixed.B0 + mixed.B1 * Rational(0);  // rebuilt below
    Poly t = Poly::variable(kTVar);
    auto scale_t = [&](const GradedMatrix& m) {
        GradedMatrix r = m;
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j) r.at(i, j) = m.at(i, j) * t;
        return r;
    };
    mixed.Bt = mixed.B0 + scale_t(mixed.B1);
    mixed.At = mixed.A0 + scale_t(mixed.A1);
    auto rep = verify_family_complex(mixed);
    CHECK(!rep.complex_identity);
    CHECK(!rep.first_failure.empty());
}

TEST_CASE("zero deformation data keeps the complex but loses exactness") {
    // with a_i = b_i = 0 the quadrics vanish, so the base pair presents a
    // sheaf supported on the whole plane rather than a cubic: B_t A_t = 0
    // still holds identically, but no fiber is exact
    auto zero = build_family(P("x3"), P("x1"), P("x2"), Poly(), Poly(), Poly(), Poly());
    auto rep = verify_family_complex(zero);
    CHECK(rep.complex_identity);
    CHECK(!rep.exact_at_samples);
    CHECK(!rep.ok());
    CHECK(!family_hilbert_check(zero, {Rational(0), Rational(1)}));
}

TEST_CASE("fibers classify by the parameter") {
    const auto& fam = fix_pn_family();
    PairBA f0 = fiber_at(fam, Rational(0));
    CHECK(classify(f0).stratum == Stratum::PlanarSingular);
    CHECK(f0 == fix_pn());

    PairBA f1 = fiber_at(fam, Rational(1));
    CHECK(classify(f1).stratum == Stratum::NonPlanar);
    auto nf = normal_form(f1);
    CHECK(nf.nonplanar_q[0] == P("x0^2+x0*x1-x3^2"));
    CHECK(nf.nonplanar_q[1] == P("x0*x2-x1*x3"));
    CHECK(nf.nonplanar_q[2] == P("x1^2+x0*x1-x2*x3"));

    PairBA f2 = fiber_at(fam, Rational(2));
    CHECK(classify(f2).stratum == Stratum::NonPlanar);
    CHECK(hilbert_polynomial(f2.A) == HilbertPoly{3, 1});
}

TEST_CASE("transformed resolution row is exact and matches the printed matrices") {
    const auto& fam = fix_pn_family();
    // the transformed row is a complex identically in t
    CHECK(compose(bt_transformed(fam), at_transformed(fam)).is_zero());
    for (long t0 : {1L, -1L, 2L}) {
        PairBA tr{bt_transformed(fam).specialize_t(Rational(t0)),
                  at_transformed(fam).specialize_t(Rational(t0))};
        CHECK(check_exact_E(tr));
    }
}

TEST_CASE("diagram orientation calibration is frozen") {
    CHECK(calibrate_diagram_orientation() == kDiagramOrientation);
}

TEST_CASE("transform diagram commutes at nonzero parameters") {
    const auto& fam = fix_pn_family();
    CHECK(verify_transform_diagram(fam, Rational(1)));
    CHECK(verify_transform_diagram(fam, Rational(-1)));
    CHECK(verify_transform_diagram(fam, Rational(2)));
    CHECK(verify_transform_diagram(fam, rat(1, 3)));
    CHECK_THROWS_AS(verify_transform_diagram(fam, Rational(0)), error);
}

TEST_CASE("family hilbert certificate") {
    const auto& fam = fix_pn_family();
    CHECK(family_hilbert_check(fam, {Rational(0), Rational(1), Rational(-1), Rational(3)}));

    DeformationFamily bad = fam;
    bad.At.at(2, 0) = bad.At.at(2, 0) + P("x0^2");  // perturb a base entry
    CHECK(!family_hilbert_check(bad, {Rational(0), Rational(1)}));
}

TEST_CASE("complex identity for random family data") {
    std::mt19937 rng(4242);
    int done = 0;
    while (done < 25) {
        Poly w = cubics::testing::random_form(rng, 1, -2, 2);
        Poly l1 = cubics::testing::random_form(rng, 1, -2, 2);
        Poly l2 = cubics::testing::random_form(rng, 1, -2, 2);
        if (w.is_zero() || l1.is_zero() || l2.is_zero() || wedge_rank({w, l1, l2}) != 3) continue;
        auto fam = build_family(w, l1, l2, cubics::testing::random_form(rng, 1, -2, 2),
                                cubics::testing::random_form(rng, 1, -2, 2),
                                cubics::testing::random_form(rng, 1, -2, 2),
                                cubics::testing::random_form(rng, 1, -2, 2));
        CHECK(compose(fam.Bt, fam.At).is_zero());
        ++done;
    }
}

TEST_CASE("fibers carry the determinantal structure of their linear part") {
    const auto& fam = fix_pn_family();
    for (long t0 : {1L, -1L, 2L, 7L}) {
        auto nf = normal_form(fiber_at(fam, Rational(t0)));
        GradedMatrix bt = bt_transformed(fam).specialize_t(Rational(t0));
        // the normal-form B and the printed transformed B span the same
        // syzygies: equal row spaces of the linear blocks
        QMatrix stack(4, 12);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 3; ++j)
                for (int v = 0; v < 4; ++v) {
                    stack.at(i, j * 4 + v) = nf.pair.B.at(i, j + 1).coeff(Monomial::var(v));
                    stack.at(2 + i, j * 4 + v) = bt.at(i, j + 1).coeff(Monomial::var(v));
                }
        CHECK(rank_of(stack) == 2);
    }
}

TEST_CASE("family JSON round trip") {
    const auto& fam = fix_pn_family();
    auto fam2 = family_from_json_text(family_to_json_text(fam));
    CHECK(fam2.Bt == fam.Bt);
    CHECK(fam2.At == fam.At);
    CHECK_THROWS_AS(family_from_json_text("{\"w\": \"x3\"}"), io_error);
}
