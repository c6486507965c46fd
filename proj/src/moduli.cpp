#include "cubics/moduli.hpp"

namespace cubics {

const char* stratum_name(Stratum s) {
    switch (s) {
        case Stratum::NonPlanar: return "NonPlanar";
        case Stratum::PlanarNonSingular: return "PlanarNonSingular";
        case Stratum::PlanarSingular: return "PlanarSingular";
    }
    return "?";
}

namespace {

struct reduction_error : error {
    using error::error;
};

NormalFormResult reduce_nonplanar(const PairBA& p) {
    Rational lambda = p.lambda();
    GroupElement e = GroupElement::identity();
    e.gamma = lambda;
    e.u3 = p.zform();
    auto z = p.zcol();
    for (int i = 0; i < 3; ++i) e.u2[i] = z[i] * (Rational(-1) / lambda);

    PairBA moved = e.apply(p);
    if (!moved.A.at(0, 0).is_zero() || moved.A.at(0, 1) != Poly(Rational(1)))
        throw reduction_error("normal_form: failed to normalize A's first row");
    for (int i = 1; i < 4; ++i)
        if (!moved.A.at(i, 1).is_zero())
            throw reduction_error("normal_form: failed to clear A's second column");
    for (int i = 0; i < 2; ++i)
        if (!moved.B.at(i, 0).is_zero())
            throw reduction_error("normal_form: B's first column did not vanish (non-exact input?)");

    // pin the scale of B: the quadrics must equal the signed minors of the
    // linear block exactly
    auto d = b_signed_minors(moved.B);
    std::array<Poly, 3> q{moved.A.at(1, 0), moved.A.at(2, 0), moved.A.at(3, 0)};
    Rational scale(0);
    for (int i = 0; i < 3 && scale == 0; ++i) {
        if (d[i].is_zero()) continue;
        const auto& [mono, lead] = *d[i].terms().begin();
        Rational cq = q[i].coeff(mono);
        if (cq == 0) continue;
        scale = cq / lead;
    }
    if (scale == 0) throw reduction_error("normal_form: degenerate minors (non-exact input?)");
    for (int i = 0; i < 3; ++i)
        if (!(d[i] * scale == q[i]))
            throw reduction_error("normal_form: quadrics are not proportional to the minors");

    QMatrix g1(2, 2);
    g1.at(0, 0) = scale;
    g1.at(1, 1) = 1;
    e.g1 = g1;

    NormalFormResult res;
    res.pair = e.apply(p);
    res.witness = e;
    res.stratum = Stratum::NonPlanar;
    res.nonplanar_q = {res.pair.A.at(1, 0), res.pair.A.at(2, 0), res.pair.A.at(3, 0)};
    return res;
}

NormalFormResult reduce_planar(const PairBA& p) {
    Poly z = p.zform();
    auto zc = p.zcol();
    if (z.is_zero()) throw reduction_error("normal_form: vanishing degree-1 entry (non-exact input?)");

    // z must lie in the span of the z-column; send the column to (z, l1, l2)
    QMatrix zmat = coeff_matrix({zc[0], zc[1], zc[2]}, 1).transpose();  // 4x3
    auto csol = solve(zmat, coeff_vector(z, 1));
    if (!csol) throw reduction_error("normal_form: z outside the span of the z-column (non-exact input?)");
    const auto c = *csol;
    int k = -1;
    for (int i = 0; i < 3 && k < 0; ++i)
        if (c[i] != 0) k = i;
    if (k < 0) throw reduction_error("normal_form: z has no expression in the z-column");

    GroupElement e = GroupElement::identity();
    QMatrix m3(3, 3);
    for (int j = 0; j < 3; ++j) m3.at(0, j) = c[j];
    int row = 1;
    for (int j = 0; j < 3; ++j) {
        if (j == k) continue;
        m3.at(row++, j) = 1;
    }
    e.g = m3;

    PairBA stage = e.apply(p);
    Poly w = stage.A.at(1, 1), l1 = stage.A.at(2, 1), l2 = stage.A.at(3, 1);
    if (!(w == stage.A.at(0, 0)))
        throw reduction_error("normal_form: z-column head does not match z");

    // clear the quadric paired with w: it must be divisible by the plane form
    auto v = stage.A.at(1, 0).divide_by_linear(w);
    if (!v) throw reduction_error("normal_form: row-2 quadric is not divisible by w (non-exact input?)");
    e.u3 = *v;

    PairBA reduced = e.apply(p);
    Poly q1 = reduced.A.at(2, 0), q2 = reduced.A.at(3, 0);
    if (!reduced.A.at(1, 0).is_zero())
        throw reduction_error("normal_form: failed to clear the row-2 quadric");

    // B is pinned completely by the planar data; solve the 2x2 change of
    // basis onto the constructed syzygy matrix
    GradedMatrix bnf = planar_normal_pair(w, l1, l2, q1, q2).B;
    const GradedMatrix& bcur = reduced.B;
    auto hsolve = [&](int i) {
        // row i of bcur = h0*row0(bnf) + h1*row1(bnf), 26 coefficients:
        // 10 for the quadric column, 4 + 4 + 4 + 4 for the linear ones
        QMatrix s(26, 2);
        std::vector<Rational> r(26, Rational(0));
        int off = 0;
        for (int jcol = 0; jcol < 4; ++jcol) {
            int deg = bcur.entry_degree(0, jcol);
            auto cur = coeff_vector(bcur.at(i, jcol), deg);
            auto r0 = coeff_vector(bnf.at(0, jcol), deg);
            auto r1 = coeff_vector(bnf.at(1, jcol), deg);
            for (std::size_t kk = 0; kk < cur.size(); ++kk) {
                s.at(off, 0) = r0[kk];
                s.at(off, 1) = r1[kk];
                r[off] = cur[kk];
                ++off;
            }
        }
        auto sol = solve(s, r);
        if (!sol) throw reduction_error("normal_form: B is not a combination of the planar syzygies (non-exact input?)");
        return *sol;
    };
    auto h0 = hsolve(0), h1 = hsolve(1);
    QMatrix h(2, 2);
    h.at(0, 0) = h0[0];
    h.at(0, 1) = h0[1];
    h.at(1, 0) = h1[0];
    h.at(1, 1) = h1[1];
    auto hinv = inverse(h);
    if (!hinv) throw reduction_error("normal_form: singular syzygy change of basis (non-exact input?)");
    e.g1 = *hinv;

    NormalFormResult res;
    res.pair = e.apply(p);
    res.witness = e;
    PlanarData pd;
    pd.w = w;
    pd.l1 = l1;
    pd.l2 = l2;
    pd.q1 = q1;
    pd.q2 = q2;
    pd.point = point_from_three_forms(w, l1, l2);
    bool singular = pd.q1.eval(pd.point) == 0 && pd.q2.eval(pd.point) == 0;
    res.stratum = singular ? Stratum::PlanarSingular : Stratum::PlanarNonSingular;
    res.planar = std::move(pd);
    return res;
}

}  // namespace

NormalFormResult normal_form(const PairBA& p) {
    if (!is_pair_stable(p)) throw error("normal_form: unstable pair");
    NormalFormResult res = p.lambda() != 0 ? reduce_nonplanar(p) : reduce_planar(p);
    if (!(res.witness.apply(p) == res.pair))
        throw error("normal_form: witness verification failed");
    return res;
}

SheafClass classify(const PairBA& p) {
    if (!is_pair_stable(p)) throw error("classify: unstable pair");
    if (p.lambda() != 0) return SheafClass{Stratum::NonPlanar, std::nullopt};
    NormalFormResult nf = normal_form(p);
    return SheafClass{nf.stratum, nf.planar};
}

bool is_singular_planar(const PairBA& p) {
    if (p.lambda() != 0) throw error("is_singular_planar: pair is not planar");
    return classify(p).stratum == Stratum::PlanarSingular;
}

std::vector<Poly> FittingIdeal::nonzero() const {
    std::vector<Poly> out;
    for (const auto& m : minors)
        if (!m.is_zero()) out.push_back(m);
    return out;
}

FittingIdeal fitting_ideal(const GradedMatrix& a) {
    if (a.source() != cr_middle() || a.target() != cr_target())
        throw error("fitting_ideal: A does not have the resolution shape");
    a.validate();
    FittingIdeal f;
    int k = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            f.minors[k++] = a.at(i, 0) * a.at(j, 1) - a.at(i, 1) * a.at(j, 0);
    return f;
}

GammaImage gamma_map(const Poly& q1, const Poly& l1, const Poly& q2, const Poly& l2) {
    for (const Poly* p : {&q1, &l1, &q2, &l2})
        for (const auto& [m, c] : p->terms())
            if (m.exps[3] != 0 || m.t_degree() != 0)
                throw error("gamma_map: inputs must live in x0, x1, x2");
    if (!l1.is_x_homogeneous(1) || !l2.is_x_homogeneous(1)) throw error("gamma_map: l1, l2 must be linear");
    if (wedge_rank({l1, l2}) != 2) throw error("gamma_map: dependent linear forms");
    Poly f = q1 * l2 - q2 * l1;
    if (f.is_zero()) throw error("gamma_map: zero determinant cubic");

    // common zero of l1, l2 in the plane: kernel of the 2x3 coefficient block
    QMatrix m(2, 3);
    for (int j = 0; j < 3; ++j) {
        m.at(0, j) = l1.coeff(Monomial::var(j));
        m.at(1, j) = l2.coeff(Monomial::var(j));
    }
    auto rk = rank_and_kernel(m);
    if (rk.rank != 2 || rk.kernel.size() != 1) throw error("gamma_map: dependent linear forms");
    GammaImage out;
    out.cubic = std::move(f);
    for (int i = 0; i < 3; ++i) out.point[i] = rk.kernel[0][i];
    std::array<Rational, 4> p4{out.point[0], out.point[1], out.point[2], Rational(0)};
    if (out.cubic.eval(p4) != 0) throw error("gamma_map: point is not on the cubic");
    return out;
}

}  // namespace cubics
