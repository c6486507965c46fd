#include "cubics/tangent.hpp"

namespace cubics {

namespace {

struct Slot {
    bool in_b;  // B1 block or A1 block
    int i, j;   // entry position
    int degree;
    int offset;  // first ambient coordinate of this entry
};

const std::vector<Slot>& ambient_slots() {
    static const std::vector<Slot> slots = [] {
        std::vector<Slot> s;
        int off = 0;
        GradedMatrix b(cr_b_source(), cr_middle());
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 4; ++j) {
                int d = b.entry_degree(i, j);
                s.push_back({true, i, j, d, off});
                off += static_cast<int>(graded_dim(d));
            }
        GradedMatrix a(cr_middle(), cr_target());
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 2; ++j) {
                int d = a.entry_degree(i, j);
                s.push_back({false, i, j, d, off});
                off += static_cast<int>(graded_dim(d));
            }
        if (off != kAmbientDim) throw error("ambient layout: dimension mismatch");
        return s;
    }();
    return slots;
}

// product coordinates: entries (i,0) cubic (20), (i,1) quadratic (10)
constexpr int kProductDim = 60;

int product_offset(int i, int j) { return i * 30 + (j == 0 ? 0 : 20); }

void add_product_entry(QMatrix& m, int col, int i, int j, const Poly& p, const Rational& sign) {
    if (p.is_zero()) return;
    int deg = j == 0 ? 3 : 2;
    auto v = coeff_vector(p, deg);
    int off = product_offset(i, j);
    for (std::size_t k = 0; k < v.size(); ++k)
        if (v[k] != 0) m.at(off + static_cast<int>(k), col) += sign * v[k];
}

}  // namespace

PairDirection ambient_to_direction(const std::vector<Rational>& v) {
    if (static_cast<int>(v.size()) != kAmbientDim) throw error("ambient vector must have 91 coordinates");
    PairDirection d{GradedMatrix(cr_b_source(), cr_middle()), GradedMatrix(cr_middle(), cr_target())};
    for (const auto& slot : ambient_slots()) {
        const auto& monos = monomials_of_degree(slot.degree);
        Poly p;
        for (std::size_t k = 0; k < monos.size(); ++k)
            if (v[slot.offset + static_cast<int>(k)] != 0)
                p += Poly(v[slot.offset + static_cast<int>(k)], monos[k]);
        (slot.in_b ? d.B1 : d.A1).at(slot.i, slot.j) = std::move(p);
    }
    return d;
}

std::vector<Rational> direction_to_ambient(const PairDirection& d) {
    std::vector<Rational> v(kAmbientDim, Rational(0));
    for (const auto& slot : ambient_slots()) {
        const Poly& p = (slot.in_b ? d.B1 : d.A1).at(slot.i, slot.j);
        if (p.is_zero()) continue;
        auto c = coeff_vector(p, slot.degree);
        for (std::size_t k = 0; k < c.size(); ++k) v[slot.offset + static_cast<int>(k)] = c[k];
    }
    return v;
}

QMatrix tangent_map_matrix(const PairBA& p) {
    QMatrix m(kProductDim, kAmbientDim);
    for (const auto& slot : ambient_slots()) {
        const auto& monos = monomials_of_degree(slot.degree);
        for (std::size_t k = 0; k < monos.size(); ++k) {
            int col = slot.offset + static_cast<int>(k);
            Poly mono(Rational(1), monos[k]);
            if (slot.in_b) {
                // B1 entry (i, j): contributes mono * A0(j, c) to row i
                for (int c = 0; c < 2; ++c)
                    add_product_entry(m, col, slot.i, c, mono * p.A.at(slot.j, c), Rational(1));
            } else {
                // A1 entry (i, j): contributes B0(r, i) * mono to column j
                for (int r = 0; r < 2; ++r)
                    add_product_entry(m, col, r, slot.j, p.B.at(r, slot.i) * mono, Rational(1));
            }
        }
    }
    return m;
}

QMatrix orbit_map_matrix(const PairBA& p) {
    QMatrix m(kAmbientDim, kLieDim);
    std::vector<Rational> unit(kLieDim, Rational(0));
    for (int k = 0; k < kLieDim; ++k) {
        unit[k] = 1;
        LieTriple l = lie_from_coords(unit);
        unit[k] = 0;
        GradedMatrix b1 = mul_left(l.R, p.B) + compose(p.B, l.s_matrix()) * Rational(-1);
        GradedMatrix a1 = compose(l.s_matrix(), p.A) + compose(p.A, l.t_matrix()) * Rational(-1);
        auto v = direction_to_ambient({std::move(b1), std::move(a1)});
        for (int r = 0; r < kAmbientDim; ++r)
            if (v[r] != 0) m.at(r, k) = v[r];
    }
    return m;
}

TangentSpace tangent_space_X(const PairBA& p) {
    auto rk = rank_and_kernel(tangent_map_matrix(p));
    TangentSpace t;
    t.dim = static_cast<long>(rk.kernel.size());
    t.basis = std::move(rk.kernel);
    return t;
}

TangentSpace orbit_tangent(const PairBA& p) {
    QMatrix om = orbit_map_matrix(p);
    long rank = rank_of(om);
    TangentSpace t;
    t.dim = rank;
    // greedy independent subset of the generator images
    QMatrix picked(kAmbientDim, 0);
    std::vector<std::vector<Rational>> basis;
    long cur = 0;
    for (int k = 0; k < kLieDim && cur < rank; ++k) {
        QMatrix trial(kAmbientDim, static_cast<int>(basis.size()) + 1);
        for (std::size_t bcol = 0; bcol < basis.size(); ++bcol)
            for (int r = 0; r < kAmbientDim; ++r) trial.at(r, static_cast<int>(bcol)) = basis[bcol][r];
        for (int r = 0; r < kAmbientDim; ++r) trial.at(r, static_cast<int>(basis.size())) = om.at(r, k);
        if (rank_of(trial) == static_cast<long>(basis.size()) + 1) {
            std::vector<Rational> col(kAmbientDim);
            for (int r = 0; r < kAmbientDim; ++r) col[r] = om.at(r, k);
            basis.push_back(std::move(col));
            ++cur;
        }
    }
    t.basis = std::move(basis);
    return t;
}

long stabilizer_dim(const PairBA& p) {
    return kLieDim - rank_of(orbit_map_matrix(p));
}

long tangent_dim_M(const PairBA& p) {
    return tangent_space_X(p).dim - orbit_tangent(p).dim;
}

TangentReport tangent_report(const PairBA& p) {
    TangentReport rep;
    rep.stratum = classify(p).stratum;
    auto tx = tangent_space_X(p);
    auto rk = rank_and_kernel(orbit_map_matrix(p));
    rep.dim_tx = tx.dim;
    rep.dim_orbit = kLieDim - static_cast<long>(rk.kernel.size());
    rep.dim_stab = static_cast<long>(rk.kernel.size());
    rep.dim_moduli = rep.dim_tx - rep.dim_orbit;
    rep.tx_basis = std::move(tx.basis);
    auto orb = orbit_tangent(p);
    if (orb.dim != rep.dim_orbit) throw error("tangent_report: orbit rank disagrees with 32 - stabilizer");
    rep.orbit_basis = std::move(orb.basis);
    rep.stab_basis = std::move(rk.kernel);

    // the orbit lies inside the tangent space of X
    QMatrix tm = tangent_map_matrix(p);
    for (const auto& v : rep.orbit_basis) {
        for (int r = 0; r < tm.rows(); ++r) {
            Rational acc(0);
            for (int c = 0; c < tm.cols(); ++c)
                if (tm.at(r, c) != 0 && v[c] != 0) acc += tm.at(r, c) * v[c];
            if (acc != 0) throw error("tangent_report: orbit vector escapes the tangent space");
        }
    }
    return rep;
}

NetTangent net_tangent_check(const NetQ& q, const Poly& l3) {
    q.validate();
    const Poly &l1 = q.at(0, 0), &w = q.at(0, 1), &l2 = q.at(1, 0);
    if (!q.at(0, 2).is_zero() || !q.at(1, 1).is_zero() || !(q.at(1, 2) == w))
        throw error("net_tangent_check: net is not in the normal form ((l1,w,0),(l2,0,w))");
    if (wedge_rank({w, l1, l2}) != 3) throw error("net_tangent_check: w, l1, l2 are dependent");
    if (!l3.is_x_homogeneous(1) || wedge_rank({w, l1, l2, l3}) != 4)
        throw error("net_tangent_check: l3 does not complete the basis");

    // 24 coordinates: entries row-major, 4 coefficients each
    auto net_coords = [](const NetQ& n) {
        std::vector<Rational> v;
        v.reserve(24);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 3; ++j)
                for (int var = 0; var < 4; ++var) v.push_back(n.at(i, j).coeff(Monomial::var(var)));
        return v;
    };

    QMatrix fq(24, 13);
    int col = 0;
    // S in gl2: S*Q
    for (int si = 0; si < 2; ++si)
        for (int sj = 0; sj < 2; ++sj, ++col) {
            NetQ img;
            for (int j = 0; j < 3; ++j) img.at(si, j) = q.at(sj, j);
            auto v = net_coords(img);
            for (int r = 0; r < 24; ++r) fq.at(r, col) = v[r];
        }
    // R in gl3: -Q*R
    for (int ri = 0; ri < 3; ++ri)
        for (int rj = 0; rj < 3; ++rj, ++col) {
            NetQ img;
            for (int i = 0; i < 2; ++i) img.at(i, rj) = -q.at(i, ri);
            auto v = net_coords(img);
            for (int r = 0; r < 24; ++r) fq.at(r, col) = v[r];
        }

    QMatrix tq(24, 5);
    {
        std::array<NetQ, 5> basis;
        basis[0].at(0, 0) = l3;  // rho
        basis[1].at(1, 0) = l3;  // sigma
        basis[2].at(0, 1) = l1;
        basis[2].at(1, 2) = l1;
        basis[3].at(0, 1) = l2;
        basis[3].at(1, 2) = l2;
        basis[4].at(0, 1) = l3;
        basis[4].at(1, 2) = l3;
        for (int b = 0; b < 5; ++b) {
            auto v = net_coords(basis[b]);
            for (int r = 0; r < 24; ++r) tq.at(r, b) = v[r];
        }
    }

    NetTangent out;
    out.dim_fq = rank_of(fq);
    out.dim_tq_prime = rank_of(tq);
    QMatrix joint(24, 18);
    for (int r = 0; r < 24; ++r) {
        for (int c = 0; c < 13; ++c) joint.at(r, c) = fq.at(r, c);
        for (int c = 0; c < 5; ++c) joint.at(r, 13 + c) = tq.at(r, c);
    }
    out.dim_intersection = out.dim_fq + out.dim_tq_prime - rank_of(joint);
    out.dim_tn = 24 - out.dim_fq;
    return out;
}

}  // namespace cubics
