#include "cubics/moduli.hpp"

#include <random>

#include "cubics/io.hpp"
#include "doctest.h"
#include "generators.hpp"

using namespace cubics;
using cubics::testing::random_pair_in_stratum;

namespace {
Poly P(const std::string& s) { return parse_poly(s); }
}

TEST_CASE("pair stability") {
    CHECK(is_pair_stable(fix_tc()));
    CHECK(is_pair_stable(fix_ps()));
    CHECK(is_pair_stable(fix_pn()));

    // lambda = 0 with a dependent z-column
    GradedMatrix a(cr_middle(), cr_target());
    a.at(0, 0) = P("x3");
    a.at(1, 1) = P("x0");
    a.at(2, 1) = P("x1");
    a.at(3, 1) = P("x0+x1");
    CHECK(!is_pair_stable(a));
}

TEST_CASE("classification of the fixtures") {
    CHECK(classify(fix_tc()).stratum == Stratum::NonPlanar);
    CHECK(classify(fix_ps()).stratum == Stratum::PlanarNonSingular);
    CHECK(classify(fix_pn()).stratum == Stratum::PlanarSingular);

    auto ps = classify(fix_ps());
    REQUIRE(ps.planar.has_value());
    std::array<Rational, 4> e0{Rational(1), Rational(0), Rational(0), Rational(0)};
    CHECK(ps.planar->point == e0);
    CHECK(ps.planar->q1.eval(e0) == 1);

    auto pn = classify(fix_pn());
    REQUIRE(pn.planar.has_value());
    CHECK(pn.planar->q1.eval(pn.planar->point) == 0);
    CHECK(pn.planar->q2.eval(pn.planar->point) == 0);
}

TEST_CASE("is_singular_planar") {
    CHECK(is_singular_planar(fix_pn()));
    CHECK(!is_singular_planar(fix_ps()));
    CHECK_THROWS_AS(is_singular_planar(fix_tc()), error);

    // replacing q1 of FIX-PS by x0*x1 makes both quadrics vanish at (1:0:0:0)
    PairBA p = planar_normal_pair(P("x3"), P("x1"), P("x2"), P("x0*x1"), P("x1*x2"));
    CHECK(is_singular_planar(p));
}

TEST_CASE("normal form is the identity on normal-form fixtures") {
    for (const PairBA* p : {&fix_tc(), &fix_ps(), &fix_pn()}) {
        auto nf = normal_form(*p);
        CHECK(nf.pair == *p);
        CHECK(nf.witness.apply(*p) == nf.pair);
        // idempotence
        auto nf2 = normal_form(nf.pair);
        CHECK(nf2.pair == nf.pair);
    }
}

TEST_CASE("normal form round-trips under random group elements") {
    std::mt19937 rng(314159);
    for (int trial = 0; trial < 12; ++trial) {
        GroupElement g = GroupElement::random(rng);

        PairBA moved_tc = g.apply(fix_tc());
        auto nf = normal_form(moved_tc);
        CHECK(nf.stratum == Stratum::NonPlanar);
        CHECK(nf.pair.lambda() == 1);
        CHECK(nf.pair.B.at(0, 0).is_zero());
        CHECK(nf.pair.B.at(1, 0).is_zero());
        CHECK(nf.pair.zform().is_zero());
        // the quadrics are exactly the signed minors of B's linear block
        auto d = b_signed_minors(nf.pair.B);
        for (int i = 0; i < 3; ++i) CHECK(nf.nonplanar_q[i] == d[i]);
        CHECK(nf.witness.apply(moved_tc) == nf.pair);
        CHECK(check_exact_E(nf.pair));

        PairBA moved_pn = g.apply(fix_pn());
        auto nfp = normal_form(moved_pn);
        CHECK(nfp.stratum == Stratum::PlanarSingular);
        REQUIRE(nfp.planar.has_value());
        CHECK(wedge_rank({nfp.planar->w, nfp.planar->l1, nfp.planar->l2}) == 3);
        CHECK(nfp.witness.apply(moved_pn) == nfp.pair);
        // idempotence on the reduced pair
        auto again = normal_form(nfp.pair);
        CHECK(again.pair == nfp.pair);

        PairBA moved_ps = g.apply(fix_ps());
        auto nfs = normal_form(moved_ps);
        CHECK(nfs.stratum == Stratum::PlanarNonSingular);
    }
}

TEST_CASE("normal form rejects unstable input") {
    GradedMatrix a(cr_middle(), cr_target());
    a.at(0, 0) = P("x3");
    a.at(1, 1) = P("x0");
    a.at(2, 1) = P("x1");
    a.at(3, 1) = P("x0+x1");
    GradedMatrix b(cr_b_source(), cr_middle());
    CHECK_THROWS_AS(normal_form(PairBA(b, a)), error);
}

TEST_CASE("fitting ideal of the fixtures") {
    auto tc = fitting_ideal(fix_tc().A);
    Poly q1 = P("x0*x2-x1^2"), q2 = P("x0*x3-x1*x2"), q3 = P("x1*x3-x2^2");
    CHECK(tc.minors[0] == -q1);
    CHECK(tc.minors[1] == -q2);
    CHECK(tc.minors[2] == -q3);
    CHECK(tc.minors[3].is_zero());
    CHECK(tc.minors[4].is_zero());
    CHECK(tc.minors[5].is_zero());
    CHECK(ideals_agree_through_degree(tc.nonzero(), {q1, q2, q3}, 3));

    auto pn = fitting_ideal(fix_pn().A);
    Poly w = P("x3"), l1 = P("x1"), l2 = P("x2");
    Poly pq1 = P("x0*x2"), pq2 = P("x1^2+x0*x1");
    CHECK(pn.minors[0] == w * w);
    CHECK(pn.minors[1] == w * l1);
    CHECK(pn.minors[2] == w * l2);
    CHECK(pn.minors[3] == -(w * pq1));
    CHECK(pn.minors[4] == -(w * pq2));
    CHECK(pn.minors[5] == pq1 * l2 - pq2 * l1);
    std::vector<Poly> four{w * w, w * l1, w * l2, l1 * pq2 - l2 * pq1};
    CHECK(ideals_agree_through_degree(pn.nonzero(), four, 3));

    // non-singular planar: the four-generator comparison must fail
    auto ps = fitting_ideal(fix_ps().A);
    Poly sq1 = P("x0^2"), sq2 = P("x1*x2");
    std::vector<Poly> four_ps{w * w, w * l1, w * l2, l1 * sq2 - l2 * sq1};
    CHECK(!ideals_agree_through_degree(ps.nonzero(), four_ps, 3));
}

TEST_CASE("fitting minors by cofactor expansion") {
    // A with second column zero except lambda = 1
    GradedMatrix a(cr_middle(), cr_target());
    a.at(0, 1) = P("1");
    a.at(1, 0) = P("x0*x2-x1^2");
    a.at(2, 0) = P("x0*x3-x1*x2");
    a.at(3, 0) = P("x1*x3-x2^2");
    auto f = fitting_ideal(a);
    CHECK(f.minors[0] == -a.at(1, 0));
    CHECK(f.minors[1] == -a.at(2, 0));
    CHECK(f.minors[2] == -a.at(3, 0));
    for (int k = 3; k < 6; ++k) CHECK(f.minors[k].is_zero());
}

TEST_CASE("gamma map") {
    auto g = gamma_map(P("x0^2"), P("x1"), P("x1*x2"), P("x2"));
    CHECK(g.cubic == P("x0^2*x2-x1^2*x2"));
    CHECK(g.point == std::array<Rational, 3>{Rational(1), Rational(0), Rational(0)});

    auto g2 = gamma_map(P("x0*x2"), P("x1"), P("x1^2+x0*x1"), P("x2"));
    CHECK(g2.cubic == P("x0*x2^2-x1^3-x0*x1^2"));
    CHECK(g2.point == std::array<Rational, 3>{Rational(1), Rational(0), Rational(0)});

    CHECK_THROWS_AS(gamma_map(P("x0^2"), P("x1"), P("x1*x2"), P("x1")), error);
    CHECK_THROWS_AS(gamma_map(P("x1^2"), P("x1"), P("x1*x2"), P("x2")), error);   // f = 0? q1*l2-q2*l1 = x1^2*x2 - x1^2*x2 = 0
    CHECK_THROWS_AS(gamma_map(P("x0*x3"), P("x1"), P("x1*x2"), P("x2")), error);  // x3 not allowed
}

TEST_CASE("gamma point always lies on the cubic") {
    std::mt19937 rng(8);
    auto rand3 = [&](int deg) {
        for (;;) {
            Poly p = cubics::testing::random_form(rng, deg, -2, 2);
            Poly cut;
            for (const auto& [m, c] : p.terms())
                if (m.exps[3] == 0) cut += Poly(c, m);
            if (!cut.is_zero()) return cut;
        }
    };
    int done = 0;
    while (done < 25) {
        Poly l1 = rand3(1), l2 = rand3(1), q1 = rand3(2), q2 = rand3(2);
        try {
            auto g = gamma_map(q1, l1, q2, l2);
            std::array<Rational, 4> p4{g.point[0], g.point[1], g.point[2], Rational(0)};
            CHECK(g.cubic.eval(p4) == 0);
            CHECK(l1.eval(p4) == 0);
            CHECK(l2.eval(p4) == 0);
            ++done;
        } catch (const error&) {
            // degenerate draw
        }
    }
}

TEST_CASE("G-invariance of classification, stability, hilbert data") {
    std::mt19937 rng(7777);
    const PairBA* fixtures[] = {&fix_tc(), &fix_ps(), &fix_pn()};
    for (int trial = 0; trial < 10; ++trial) {
        GroupElement g = GroupElement::random(rng);
        for (const PairBA* p : fixtures) {
            PairBA moved = g.apply(*p);
            CHECK(is_pair_stable(moved) == is_pair_stable(*p));
            CHECK(classify(moved).stratum == classify(*p).stratum);
            CHECK(hilbert_polynomial(moved.A) == hilbert_polynomial(p->A));
            if (p->lambda() == 0) CHECK(is_singular_planar(moved) == is_singular_planar(*p));
            // Fitting generators transform within the same ideal only under
            // the degree-preserving part of the action; the minors of the
            // moved pair still span an ideal with the same graded dimensions
            auto fa = fitting_ideal(p->A).nonzero();
            auto fb = fitting_ideal(moved.A).nonzero();
            for (int d = 2; d <= 3; ++d) {
                auto pa = ideal_graded_piece(fa, d);
                auto pb = ideal_graded_piece(fb, d);
                CHECK(span_dimension(pa, d) == span_dimension(pb, d));
            }
        }
    }
}

TEST_CASE("pair JSON round trip and fixture files") {
    for (const PairBA* p : {&fix_tc(), &fix_ps(), &fix_pn()}) {
        CHECK(pair_from_json_text(pair_to_json_text(*p)) == *p);
    }
    CHECK_THROWS_AS(pair_from_json_text("{\"B\": []}"), io_error);
    CHECK_THROWS_AS(pair_from_json_text("not json"), io_error);
    // degree violation: constant in a quadric slot
    CHECK_THROWS_AS(pair_from_json_text(
                        "{\"B\": [[\"0\",\"x2\",\"-1*x1\",\"x0\"],[\"0\",\"x3\",\"-1*x2\",\"x1\"]],"
                        "\"A\": [[\"0\",\"1\"],[\"5\",\"0\"],[\"x0*x3-x1*x2\",\"0\"],[\"x1*x3-x2^2\",\"0\"]]}"),
                    error);
}

TEST_CASE("random pairs per stratum classify correctly") {
    std::mt19937 rng(1234);
    for (Stratum s : {Stratum::NonPlanar, Stratum::PlanarNonSingular, Stratum::PlanarSingular}) {
        for (int i = 0; i < 4; ++i) {
            PairBA p = random_pair_in_stratum(rng, s);
            CHECK(classify(p).stratum == s);
            CHECK(check_exact_E(p));
            CHECK(hilbert_polynomial(p.A) == HilbertPoly{3, 1});
        }
    }
}
