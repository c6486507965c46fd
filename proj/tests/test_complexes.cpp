#include <random>

#include "cubics/group.hpp"
#include "cubics/pair.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace cubics;
using cubics::testing::naive_rank;
using cubics::testing::random_form;

TEST_CASE("compose vanishes on fixtures") {
    for (const PairBA* p : {&fix_tc(), &fix_ps(), &fix_pn()}) {
        GradedMatrix prod = compose(p->B, p->A);
        CHECK(prod.is_zero());
        CHECK(prod.source() == cr_b_source());
        CHECK(prod.target() == cr_target());
        CHECK(prod.entry_degree(0, 0) == 3);
    }
}

TEST_CASE("compose on non-complementary positions") {
    GradedMatrix b({-3}, {-2});
    b.at(0, 0) = parse_poly("x3");
    GradedMatrix a({-2}, {-1});
    a.at(0, 0) = parse_poly("x3");
    GradedMatrix prod = compose(b, a);
    CHECK(prod.at(0, 0) == parse_poly("x3^2"));
}

TEST_CASE("compose rejects bad shapes and degrees") {
    GradedMatrix b({-3}, {-2});
    b.at(0, 0) = parse_poly("x3");
    GradedMatrix wrong({-1}, {0});
    wrong.at(0, 0) = parse_poly("x0");
    CHECK_THROWS_AS(compose(b, wrong), error);

    GradedMatrix bad({-3}, {-2});
    bad.at(0, 0) = parse_poly("x3^2");  // needs degree 1
    CHECK_THROWS_AS(compose(bad, wrong), error);
}

TEST_CASE("section matrix shapes and ranks for FIX-TC") {
    QMatrix a3 = sections_matrix(fix_tc().A, 3);
    CHECK(a3.rows() == 22);
    CHECK(a3.cols() == 30);
    CHECK(naive_rank(a3) == 20);
    CHECK(rank_of(a3) == 20);

    QMatrix b3 = sections_matrix(fix_tc().B, 3);
    CHECK(b3.rows() == 2);
    CHECK(b3.cols() == 22);
    CHECK(rank_of(b3) == 2);

    // the kernel of the A-sections map at twist 3 is exactly the image of B
    auto rk = rank_and_kernel(a3.transpose());
    CHECK(rk.kernel.size() == 2);
}

TEST_CASE("check_exact_E on fixtures, including strict twists") {
    CHECK(check_exact_E(fix_tc(), true));
    CHECK(check_exact_E(fix_ps(), true));
    CHECK(check_exact_E(fix_pn(), true));
}

TEST_CASE("zeroing B's second row breaks exactness") {
    PairBA p = fix_tc();
    for (int j = 0; j < 4; ++j) p.B.at(1, j) = Poly();
    CHECK(rank_of(sections_matrix(p.B, 3)) == 1);
    CHECK(!check_exact_E(p));
}

TEST_CASE("hilbert function and polynomial on fixtures") {
    CHECK(hilbert_function(fix_tc().A, 0) == 1);
    CHECK(hilbert_function(fix_tc().A, 1) == 4);
    CHECK(hilbert_function(fix_tc().A, 2) == 7);
    // oracle for the m=2 value: full row rank of the 7x14 section matrix
    QMatrix a2 = sections_matrix(fix_tc().A, 2);
    CHECK(a2.rows() == 7);
    CHECK(a2.cols() == 14);
    CHECK(naive_rank(a2) == 7);

    for (const PairBA* p : {&fix_tc(), &fix_ps(), &fix_pn()}) {
        HilbertPoly hp = hilbert_polynomial(p->A);
        CHECK(hp.multiplicity == 3);
        CHECK(hp.constant == 1);
        CHECK(hp.reduced_constant() == rat(1, 3));
        for (int m = 0; m <= 6; ++m) CHECK(hilbert_function(p->A, m) == 3 * m + 1);
    }
}

TEST_CASE("hilbert_polynomial rejects a corrupted presentation") {
    PairBA p = fix_tc();
    // killing A's second column leaves a cokernel with an O(-1) summand,
    // whose Hilbert function grows cubically
    p.A.at(0, 1) = Poly();
    CHECK_THROWS_AS(hilbert_polynomial(p.A), error);
}

TEST_CASE("exactness is G-invariant") {
    std::mt19937 rng(2024);
    for (int i = 0; i < 8; ++i) {
        GroupElement e = GroupElement::random(rng);
        CHECK(check_exact_E(e.apply(fix_tc())));
        CHECK(check_exact_E(e.apply(fix_pn())));
    }
    // and a non-exact pair stays non-exact
    PairBA broken = fix_tc();
    for (int j = 0; j < 4; ++j) broken.B.at(1, j) = Poly();
    std::mt19937 rng2(5);
    GroupElement e = GroupElement::random(rng2);
    PairBA moved{mul_left(e.g1, compose(broken.B, e.g2_inverse())),
                 compose(compose(e.g2_matrix(), broken.A), e.g3_inverse())};
    CHECK(!check_exact_E(moved));
}

TEST_CASE("compose is bilinear and associative") {
    std::mt19937 rng(42);
    auto rand_graded = [&](const TwistList& s, const TwistList& t) {
        GradedMatrix m(s, t);
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j) {
                int d = m.entry_degree(i, j);
                if (d >= 0) m.at(i, j) = random_form(rng, d, -2, 2);
            }
        return m;
    };
    for (int trial = 0; trial < 10; ++trial) {
        TwistList s1{-3, -3}, s2{-2, -1}, s3{-1, 0}, s4{1};
        GradedMatrix x = rand_graded(s1, s2), x2 = rand_graded(s1, s2);
        GradedMatrix y = rand_graded(s2, s3), z = rand_graded(s3, s4);
        CHECK(compose(compose(x, y), z) == compose(x, compose(y, z)));
        CHECK(compose(x + x2, y) == compose(x, y) + compose(x2, y));
        CHECK(compose(x * rat(3), y) == compose(x, y) * rat(3));
    }
}

TEST_CASE("sections_matrix refuses parametric entries") {
    GradedMatrix b({-3}, {-2});
    b.at(0, 0) = parse_poly("t*x3");
    CHECK_THROWS_AS(sections_matrix(b, 3), error);
}
