#include "cubics/tangent.hpp"

#include <random>

#include "cubics/deform.hpp"
#include "doctest.h"
#include "generators.hpp"

using namespace cubics;
using cubics::testing::random_pair_in_stratum;

TEST_CASE("ambient coordinate layout round trips") {
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> coeff(-4, 4);
    std::vector<Rational> v(kAmbientDim);
    for (auto& x : v) x = coeff(rng);
    auto d = ambient_to_direction(v);
    CHECK(direction_to_ambient(d) == v);
    // the lambda coordinate is A1's degree-0 entry
    std::vector<Rational> e(kAmbientDim, Rational(0));
    e[kLambdaCoord] = 1;
    auto dl = ambient_to_direction(e);
    CHECK(dl.A1.at(0, 1) == Poly(Rational(1)));
    CHECK(dl.B1.is_zero());
}

TEST_CASE("tangent space dimensions at the fixtures") {
    CHECK(tangent_space_X(fix_tc()).dim == 42);
    CHECK(tangent_space_X(fix_ps()).dim == 43);
    CHECK(tangent_space_X(fix_pn()).dim == 44);
}

TEST_CASE("orbit dimension and stabilizer at the fixtures") {
    for (const PairBA* p : {&fix_tc(), &fix_ps(), &fix_pn()}) {
        CHECK(orbit_tangent(*p).dim == 30);
        CHECK(stabilizer_dim(*p) == 2);
    }
}

TEST_CASE("moduli tangent dimensions 12 / 13 / 14") {
    CHECK(tangent_dim_M(fix_tc()) == 12);
    CHECK(tangent_dim_M(fix_ps()) == 13);
    CHECK(tangent_dim_M(fix_pn()) == 14);
}

TEST_CASE("tangent report consistency checks") {
    auto rep = tangent_report(fix_pn());
    CHECK(rep.stratum == Stratum::PlanarSingular);
    CHECK(rep.dim_tx == 44);
    CHECK(rep.dim_orbit == 30);
    CHECK(rep.dim_stab == 2);
    CHECK(rep.dim_moduli == 14);
    CHECK(rep.tx_basis.size() == 44);
    CHECK(rep.orbit_basis.size() == 30);
    CHECK(rep.stab_basis.size() == 2);
    CHECK(rep.dim_orbit + rep.dim_stab == kLieDim);
}

TEST_CASE("tangent dimensions are G-invariant and stratum-constant") {
    std::mt19937 rng(271828);
    for (Stratum s : {Stratum::NonPlanar, Stratum::PlanarNonSingular, Stratum::PlanarSingular}) {
        long expect = s == Stratum::NonPlanar ? 12 : (s == Stratum::PlanarNonSingular ? 13 : 14);
        for (int i = 0; i < 5; ++i) {
            PairBA p = random_pair_in_stratum(rng, s);
            CHECK(tangent_dim_M(p) == expect);
            CHECK(stabilizer_dim(p) == 2);
        }
    }
}

TEST_CASE("planar non-singular tangent vectors have vanishing lambda coordinate") {
    auto tx = tangent_space_X(fix_ps());
    for (const auto& v : tx.basis) CHECK(v[kLambdaCoord] == 0);
    // and the same for a moved pair: the lambda coordinate is not preserved
    // by the action, so check the fixture-position statement only
}

TEST_CASE("the deformation vector is tangent at singular points with lambda = 1") {
    const auto& fam = fix_pn_family();
    auto v = direction_to_ambient({fam.B1, fam.A1});
    CHECK(v[kLambdaCoord] == 1);
    QMatrix tm = tangent_map_matrix(fix_pn());
    for (int r = 0; r < tm.rows(); ++r) {
        Rational acc(0);
        for (int c = 0; c < tm.cols(); ++c)
            if (tm.at(r, c) != 0 && v[c] != 0) acc += tm.at(r, c) * v[c];
        CHECK(acc == 0);
    }
    // at a non-singular planar point no tangent vector has lambda != 0, so
    // the analogous vector cannot be tangent there
    auto tx = tangent_space_X(fix_pn());
    bool has_lambda = false;
    for (const auto& w : tx.basis)
        if (w[kLambdaCoord] != 0) has_lambda = true;
    CHECK(has_lambda);
}

TEST_CASE("net tangent check at the degenerate normal form") {
    NetQ q;
    q.at(0, 0) = parse_poly("x1");
    q.at(0, 1) = parse_poly("x3");
    q.at(1, 0) = parse_poly("x2");
    q.at(1, 2) = parse_poly("x3");
    auto nt = net_tangent_check(q, parse_poly("x0"));
    CHECK(nt.dim_fq == 12);
    CHECK(nt.dim_tq_prime == 5);
    CHECK(nt.dim_intersection == 0);
    CHECK(nt.dim_tn == 12);

    // permuted basis roles
    NetQ q2;
    q2.at(0, 0) = parse_poly("x0");
    q2.at(0, 1) = parse_poly("x1");
    q2.at(1, 0) = parse_poly("x3");
    q2.at(1, 2) = parse_poly("x1");
    auto nt2 = net_tangent_check(q2, parse_poly("x2"));
    CHECK(nt2.dim_fq == 12);
    CHECK(nt2.dim_tq_prime == 5);
    CHECK(nt2.dim_intersection == 0);

    // degenerate input: l2 = l1
    NetQ bad = q;
    bad.at(1, 0) = parse_poly("x1");
    CHECK_THROWS_AS(net_tangent_check(bad, parse_poly("x0")), error);
}
