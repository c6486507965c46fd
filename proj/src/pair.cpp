#include "cubics/pair.hpp"

namespace cubics {

PairBA::PairBA(GradedMatrix b, GradedMatrix a) : B(std::move(b)), A(std::move(a)) {
    validate_cr_shapes(B, A);
}

Rational PairBA::lambda() const {
    const Poly& l = A.at(0, 1);
    if (l.is_zero()) return Rational(0);
    return l.coeff(Monomial::one());
}

std::array<Poly, 3> PairBA::zcol() const {
    return {A.at(1, 1), A.at(2, 1), A.at(3, 1)};
}

bool is_pair_stable(const GradedMatrix& a) {
    if (a.source() != cr_middle() || a.target() != cr_target())
        throw error("is_pair_stable: A does not have the resolution shape");
    if (!a.at(0, 1).is_zero()) return true;
    return wedge_rank({a.at(1, 1), a.at(2, 1), a.at(3, 1)}) == 3;
}

namespace {

GradedMatrix make_b(const std::array<std::string, 8>& rows) {
    GradedMatrix b(cr_b_source(), cr_middle());
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 4; ++j) b.at(i, j) = parse_poly(rows[static_cast<std::size_t>(i) * 4 + j]);
    return b;
}

GradedMatrix make_a(const std::array<std::string, 8>& rows) {
    GradedMatrix a(cr_middle(), cr_target());
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 2; ++j) a.at(i, j) = parse_poly(rows[static_cast<std::size_t>(i) * 2 + j]);
    return a;
}

}  // namespace

PairBA planar_normal_pair(const Poly& w, const Poly& l1, const Poly& l2, const Poly& q1,
                          const Poly& q2) {
    GradedMatrix b(cr_b_source(), cr_middle());
    b.at(0, 0) = -q1;
    b.at(0, 1) = -l1;
    b.at(0, 2) = w;
    b.at(1, 0) = -q2;
    b.at(1, 1) = -l2;
    b.at(1, 3) = w;
    GradedMatrix a(cr_middle(), cr_target());
    a.at(0, 0) = w;
    a.at(1, 1) = w;
    a.at(2, 0) = q1;
    a.at(2, 1) = l1;
    a.at(3, 0) = q2;
    a.at(3, 1) = l2;
    return PairBA(std::move(b), std::move(a));
}

std::array<Poly, 3> b_signed_minors(const GradedMatrix& b) {
    auto minor = [&](int c1, int c2) {
        return b.at(0, c1) * b.at(1, c2) - b.at(0, c2) * b.at(1, c1);
    };
    return {minor(2, 3), -minor(1, 3), minor(1, 2)};
}

PairBA nonplanar_normal_pair(const std::array<std::array<Poly, 3>, 2>& lin) {
    GradedMatrix b(cr_b_source(), cr_middle());
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 3; ++j) b.at(i, j + 1) = lin[i][j];
    auto q = b_signed_minors(b);
    GradedMatrix a(cr_middle(), cr_target());
    a.at(0, 1) = Poly(Rational(1));
    for (int i = 0; i < 3; ++i) a.at(i + 1, 0) = q[i];
    return PairBA(std::move(b), std::move(a));
}

const PairBA& fix_tc() {
    static const PairBA p(
        make_b({"0", "x2", "-1*x1", "x0",
                "0", "x3", "-1*x2", "x1"}),
        make_a({"0", "1",
                "x0*x2-x1^2", "0",
                "x0*x3-x1*x2", "0",
                "x1*x3-x2^2", "0"}));
    return p;
}

const PairBA& fix_ps() {
    static const PairBA p = planar_normal_pair(parse_poly("x3"), parse_poly("x1"), parse_poly("x2"),
                                               parse_poly("x0^2"), parse_poly("x1*x2"));
    return p;
}

const PairBA& fix_pn() {
    static const PairBA p = planar_normal_pair(parse_poly("x3"), parse_poly("x1"), parse_poly("x2"),
                                               parse_poly("x0*x2"), parse_poly("x1^2+x0*x1"));
    return p;
}

}  // namespace cubics
