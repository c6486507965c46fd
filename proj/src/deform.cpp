#include "cubics/deform.hpp"

namespace cubics {

namespace {

void require_linear_or_zero(const Poly& p, const char* name) {
    if (!p.is_zero() && (!p.is_x_homogeneous(1) || p.has_t()))
        throw error(std::string("build_family: ") + name + " is not a linear form");
}

Poly tvar() { return Poly::variable(kTVar); }

GradedMatrix power(const GradedMatrix& m, int exp) {
    if (exp == 1) return m;
    // exp == -1: the diagram matrices are block lower triangular
    // [[a, 0], [u, D]] with scalar diagonal blocks
    if (m.rows() == 2) {
        Rational a = m.at(0, 0).coeff(Monomial::one());
        Rational d = m.at(1, 1).coeff(Monomial::one());
        if (a == 0 || d == 0) throw error("diagram matrix not invertible");
        GradedMatrix inv(m.source(), m.target());
        inv.at(0, 0) = Poly(1 / a);
        inv.at(1, 1) = Poly(1 / d);
        inv.at(1, 0) = m.at(1, 0) * (Rational(-1) / (a * d));
        return inv;
    }
    // 4x4 block [[a, 0], [u, d*I]]
    Rational a = m.at(0, 0).coeff(Monomial::one());
    GradedMatrix inv(m.source(), m.target());
    if (a == 0) throw error("diagram matrix not invertible");
    inv.at(0, 0) = Poly(1 / a);
    for (int i = 1; i < 4; ++i) {
        Rational d = m.at(i, i).coeff(Monomial::one());
        if (d == 0) throw error("diagram matrix not invertible");
        inv.at(i, i) = Poly(1 / d);
        inv.at(i, 0) = m.at(i, 0) * (Rational(-1) / (a * d));
    }
    return inv;
}

}  // namespace

DeformationFamily build_family(const Poly& w, const Poly& l1, const Poly& l2, const Poly& a1,
                               const Poly& b1, const Poly& a2, const Poly& b2) {
    for (const auto* f : {&w, &l1, &l2})
        if (f->is_zero() || !f->is_x_homogeneous(1) || f->has_t())
            throw error("build_family: w, l1, l2 must be linear forms");
    if (wedge_rank({w, l1, l2}) != 3) throw error("build_family: dependent forms w, l1, l2");
    require_linear_or_zero(a1, "a1");
    require_linear_or_zero(b1, "b1");
    require_linear_or_zero(a2, "a2");
    require_linear_or_zero(b2, "b2");

    DeformationFamily fam;
    fam.w = w;
    fam.l1 = l1;
    fam.l2 = l2;
    fam.a1 = a1;
    fam.b1 = b1;
    fam.a2 = a2;
    fam.b2 = b2;
    fam.q1 = a1 * l1 + b1 * l2;
    fam.q2 = a2 * l1 + b2 * l2;

    PairBA base = planar_normal_pair(w, l1, l2, fam.q1, fam.q2);
    fam.B0 = base.B;
    fam.A0 = base.A;

    fam.B1 = GradedMatrix(cr_b_source(), cr_middle());
    fam.B1.at(0, 2) = a1;
    fam.B1.at(0, 3) = b1;
    fam.B1.at(1, 2) = a2;
    fam.B1.at(1, 3) = b2;

    fam.A1 = GradedMatrix(cr_middle(), cr_target());
    fam.A1.at(0, 0) = a1 + b2;
    fam.A1.at(0, 1) = Poly(Rational(1));
    fam.A1.at(1, 0) = b1 * a2 - b2 * a1;

    Poly t = tvar();
    auto scale_t = [&](const GradedMatrix& m) {
        GradedMatrix r = m;
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j) r.at(i, j) = m.at(i, j) * t;
        return r;
    };
    fam.Bt = fam.B0 + scale_t(fam.B1);
    fam.At = fam.A0 + scale_t(fam.A1);
    fam.Bt.validate();
    fam.At.validate();
    return fam;
}

FamilyComplexReport verify_family_complex(const DeformationFamily& fam) {
    FamilyComplexReport rep;
    GradedMatrix prod = compose(fam.Bt, fam.At);
    rep.complex_identity = prod.is_zero();
    if (!rep.complex_identity) {
        for (int i = 0; i < prod.rows() && rep.first_failure.empty(); ++i)
            for (int j = 0; j < prod.cols(); ++j)
                if (!prod.at(i, j).is_zero()) {
                    rep.first_failure = "product entry (" + std::to_string(i + 1) + "," +
                                        std::to_string(j + 1) + ") = " + prod.at(i, j).str();
                    break;
                }
    }
    rep.exact_at_samples = true;
    for (long s : {0L, 1L, -1L, 2L, 7L}) {
        PairBA fib{fam.Bt.specialize_t(Rational(s)), fam.At.specialize_t(Rational(s))};
        if (!check_exact_E(fib)) {
            rep.exact_at_samples = false;
            if (rep.first_failure.empty())
                rep.first_failure = "exactness fails at t = " + std::to_string(s);
            break;
        }
    }
    return rep;
}

PairBA fiber_at(const DeformationFamily& fam, const Rational& t0) {
    PairBA fib{fam.Bt.specialize_t(t0), fam.At.specialize_t(t0)};
    if (!is_pair_stable(fib)) throw error("fiber_at: unstable fiber (bad family data)");
    if (!check_exact_E(fib)) throw error("fiber_at: non-exact fiber (bad family data)");
    return fib;
}

GradedMatrix bt_transformed(const DeformationFamily& fam) {
    Poly t = tvar();
    GradedMatrix b(cr_b_source(), cr_middle());
    b.at(0, 1) = -fam.l1;
    b.at(0, 2) = t * fam.a1 + fam.w;
    b.at(0, 3) = t * fam.b1;
    b.at(1, 1) = -fam.l2;
    b.at(1, 2) = t * fam.a2;
    b.at(1, 3) = t * fam.b2 + fam.w;
    return b;
}

GradedMatrix at_transformed(const DeformationFamily& fam) {
    Poly t = tvar();
    Poly sigma = fam.a1 + fam.b2;
    Poly delta = fam.b1 * fam.a2 - fam.b2 * fam.a1;
    GradedMatrix a(cr_middle(), cr_target());
    a.at(0, 1) = Poly(Rational(1));
    a.at(1, 0) = t * t * delta - t * sigma * fam.w - fam.w * fam.w;
    a.at(2, 0) = t * fam.q1 - t * sigma * fam.l1 - fam.l1 * fam.w;
    a.at(3, 0) = t * fam.q2 - t * sigma * fam.l2 - fam.l2 * fam.w;
    return a;
}

GradedMatrix diagram_t0(const DeformationFamily& fam, const Rational& t) {
    if (t == 0) throw error("diagram transformations are not invertible at t = 0");
    GradedMatrix m(cr_target(), cr_target());
    m.at(0, 0) = Poly(Rational(1));
    m.at(1, 0) = -(fam.a1 + fam.b2) - fam.w * (1 / t);
    m.at(1, 1) = Poly(Rational(-1) / (t * t));
    return m;
}

GradedMatrix diagram_t1(const DeformationFamily& fam, const Rational& t) {
    if (t == 0) throw error("diagram transformations are not invertible at t = 0");
    GradedMatrix m(cr_middle(), cr_middle());
    m.at(0, 0) = Poly(-t);
    m.at(1, 0) = -fam.w;
    m.at(2, 0) = -fam.l1;
    m.at(3, 0) = -fam.l2;
    for (int i = 1; i < 4; ++i) m.at(i, i) = Poly(t);
    return m;
}

GradedMatrix diagram_t2(const Rational& t) {
    if (t == 0) throw error("diagram transformations are not invertible at t = 0");
    GradedMatrix m(cr_b_source(), cr_b_source());
    m.at(0, 0) = Poly(1 / t);
    m.at(1, 1) = Poly(1 / t);
    return m;
}

namespace {

bool squares_commute(const DeformationFamily& fam, const Rational& t0, const DiagramOrientation& o,
                     bool* b_square, bool* a_square) {
    GradedMatrix b = fam.Bt.specialize_t(t0);
    GradedMatrix a = fam.At.specialize_t(t0);
    GradedMatrix bt = bt_transformed(fam).specialize_t(t0);
    GradedMatrix at = at_transformed(fam).specialize_t(t0);
    GradedMatrix t2 = power(diagram_t2(t0), o.t2_exp);
    GradedMatrix t1b = power(diagram_t1(fam, t0), o.t1_b_exp);
    GradedMatrix t1a = power(diagram_t1(fam, t0), o.t1_a_exp);
    GradedMatrix t0m = power(diagram_t0(fam, t0), o.t0_exp);
    *b_square = compose(compose(t2, b), t1b) == bt;
    *a_square = compose(compose(t1a, a), t0m) == at;
    return *b_square && *a_square;
}

}  // namespace

DiagramOrientation calibrate_diagram_orientation() {
    const DeformationFamily& fam = fix_pn_family();
    // t = 2: at t = 1 every transformation is an involution and the
    // candidate orientations coincide
    Rational t0(2);
    DiagramOrientation found;
    int hits = 0;
    for (int e2 : {1, -1})
        for (int e1b : {1, -1})
            for (int e1a : {1, -1})
                for (int e0 : {1, -1}) {
                    DiagramOrientation o{e2, e1b, e1a, e0};
                    bool bs = false, as = false;
                    squares_commute(fam, t0, o, &bs, &as);
                    if (bs && as) {
                        found = o;
                        ++hits;
                    }
                }
    if (hits != 1) throw error("diagram calibration did not find a unique orientation");
    return found;
}

bool verify_transform_diagram(const DeformationFamily& fam, const Rational& t0) {
    if (t0 == 0) throw error("verify_transform_diagram: transformations are not invertible at t = 0");
    bool bs = false, as = false;
    squares_commute(fam, t0, kDiagramOrientation, &bs, &as);
    if (!bs) throw error("verify_transform_diagram: the B square does not commute at t = " + to_string(t0));
    if (!as) throw error("verify_transform_diagram: the A square does not commute at t = " + to_string(t0));
    return true;
}

bool family_hilbert_check(const DeformationFamily& fam, const std::vector<Rational>& samples) {
    for (const auto& t0 : samples) {
        GradedMatrix a = fam.At.specialize_t(t0);
        for (int m = 0; m <= 5; ++m)
            if (hilbert_function(a, m) != 3 * m + 1) return false;
    }
    return true;
}

const DeformationFamily& fix_pn_family() {
    static const DeformationFamily fam = build_family(
        parse_poly("x3"), parse_poly("x1"), parse_poly("x2"), Poly(), parse_poly("x0"),
        parse_poly("x1+x0"), Poly());
    return fam;
}

}  // namespace cubics
