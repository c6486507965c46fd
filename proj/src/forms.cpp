#include "cubics/forms.hpp"

#include <map>

namespace cubics {

namespace {

// index of each degree-d monomial inside monomials_of_degree(d)
const std::map<Monomial, int, GradedLexBefore>& index_of_degree(int d) {
    static std::map<int, std::map<Monomial, int, GradedLexBefore>> cache;
    auto it = cache.find(d);
    if (it == cache.end()) {
        std::map<Monomial, int, GradedLexBefore> idx;
        const auto& monos = monomials_of_degree(d);
        for (int i = 0; i < static_cast<int>(monos.size()); ++i) idx[monos[i]] = i;
        it = cache.emplace(d, std::move(idx)).first;
    }
    return it->second;
}

}  // namespace

std::vector<Rational> coeff_vector(const Poly& p, int degree) {
    const auto& idx = index_of_degree(degree);
    std::vector<Rational> v(idx.size(), Rational(0));
    for (const auto& [m, c] : p.terms()) {
        auto it = idx.find(m);
        if (it == idx.end()) throw error("coeff_vector: term outside degree-" + std::to_string(degree) + " basis");
        v[it->second] = c;
    }
    return v;
}

QMatrix coeff_matrix(const std::vector<Poly>& polys, int degree) {
    QMatrix m(static_cast<int>(polys.size()), static_cast<int>(graded_dim(degree)));
    for (int i = 0; i < static_cast<int>(polys.size()); ++i) {
        auto row = coeff_vector(polys[i], degree);
        for (int j = 0; j < m.cols(); ++j) m.at(i, j) = row[j];
    }
    return m;
}

long span_dimension(const std::vector<Poly>& polys, int degree) {
    return rank_of(coeff_matrix(polys, degree));
}

long wedge_rank(const std::vector<Poly>& forms) {
    for (const auto& f : forms)
        if (!f.is_x_homogeneous(1) || f.has_t())
            throw error("wedge_rank: input is not a linear form");
    return span_dimension(forms, 1);
}

Rational eval_at(const Poly& p, const std::array<Rational, 4>& point) {
    return p.eval(point);
}

std::vector<Poly> ideal_graded_piece(const std::vector<Poly>& gens, int d) {
    std::vector<Poly> piece;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        if (!g.is_x_homogeneous() || g.has_t()) throw error("ideal_graded_piece: generators must be homogeneous");
        int dg = g.x_degree();
        if (dg > d) continue;
        for (const auto& m : monomials_of_degree(d - dg)) piece.push_back(g * Poly(Rational(1), m));
    }
    return piece;
}

bool ideals_agree_through_degree(const std::vector<Poly>& a, const std::vector<Poly>& b, int dmax) {
    for (int d = 0; d <= dmax; ++d) {
        auto pa = ideal_graded_piece(a, d);
        auto pb = ideal_graded_piece(b, d);
        long ra = pa.empty() ? 0 : span_dimension(pa, d);
        long rb = pb.empty() ? 0 : span_dimension(pb, d);
        if (ra != rb) return false;
        auto joint = pa;
        joint.insert(joint.end(), pb.begin(), pb.end());
        long rj = joint.empty() ? 0 : span_dimension(joint, d);
        if (rj != ra) return false;
    }
    return true;
}

std::array<Rational, 4> point_from_three_forms(const Poly& f1, const Poly& f2, const Poly& f3) {
    // coefficient rows over the basis x0..x3; the kernel of the 3x4 system
    // is the common zero locus
    auto rk = rank_and_kernel(coeff_matrix({f1, f2, f3}, 1));
    if (rk.rank != 3 || rk.kernel.size() != 1)
        throw error("point_from_three_forms: forms are not independent");
    std::array<Rational, 4> p;
    for (int i = 0; i < 4; ++i) p[i] = rk.kernel[0][i];
    return p;
}

}  // namespace cubics
