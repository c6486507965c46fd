#include "cubics/group.hpp"

namespace cubics {

namespace {

Poly linear_from(const std::array<Rational, 4>& c) {
    Poly p;
    for (int i = 0; i < 4; ++i)
        if (c[i] != 0) p += Poly(c[i], Monomial::var(i));
    return p;
}

Poly random_linear(std::mt19937& rng) {
    std::uniform_int_distribution<int> coeff(-2, 2);
    std::array<Rational, 4> c;
    for (auto& x : c) x = coeff(rng);
    return linear_from(c);
}

QMatrix random_invertible(std::mt19937& rng, int n) {
    std::uniform_int_distribution<int> coeff(-2, 2);
    for (;;) {
        QMatrix m(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m.at(i, j) = coeff(rng);
        if (det(m) != 0) return m;
    }
}

Rational random_unit(std::mt19937& rng) {
    std::uniform_int_distribution<int> pick(-3, 3);
    for (;;) {
        int v = pick(rng);
        if (v != 0) return Rational(v);
    }
}

}  // namespace

GroupElement GroupElement::identity() {
    GroupElement e;
    e.g1 = QMatrix::identity(2);
    e.alpha = 1;
    e.g = QMatrix::identity(3);
    e.beta = 1;
    e.gamma = 1;
    return e;
}

GroupElement GroupElement::random(std::mt19937& rng) {
    GroupElement e;
    e.g1 = random_invertible(rng, 2);
    e.alpha = random_unit(rng);
    e.g = random_invertible(rng, 3);
    for (auto& u : e.u2) u = random_linear(rng);
    e.beta = random_unit(rng);
    e.gamma = random_unit(rng);
    e.u3 = random_linear(rng);
    return e;
}

void GroupElement::validate() const {
    if (alpha == 0 || beta == 0 || gamma == 0 || det(g1) == 0 || det(g) == 0)
        throw error("GroupElement: degenerate data");
    for (const auto& u : u2)
        if (!u.is_zero() && (!u.is_x_homogeneous(1) || u.has_t())) throw error("GroupElement: u_i not linear");
    if (!u3.is_zero() && (!u3.is_x_homogeneous(1) || u3.has_t())) throw error("GroupElement: u not linear");
}

GradedMatrix GroupElement::g2_matrix() const {
    GradedMatrix m(cr_middle(), cr_middle());
    m.at(0, 0) = Poly(alpha);
    for (int i = 0; i < 3; ++i) {
        m.at(i + 1, 0) = u2[i];
        for (int j = 0; j < 3; ++j) m.at(i + 1, j + 1) = Poly(g.at(i, j));
    }
    return m;
}

GradedMatrix GroupElement::g2_inverse() const {
    // [[a,0],[u,g]]^-1 = [[1/a, 0], [-g^-1 u / a, g^-1]]
    auto ginv = inverse(g);
    if (!ginv) throw error("GroupElement: g not invertible");
    GradedMatrix m(cr_middle(), cr_middle());
    m.at(0, 0) = Poly(Rational(1) / alpha);
    for (int i = 0; i < 3; ++i) {
        Poly acc;
        for (int k = 0; k < 3; ++k) acc += u2[k] * ginv->at(i, k);
        m.at(i + 1, 0) = acc * (Rational(-1) / alpha);
        for (int j = 0; j < 3; ++j) m.at(i + 1, j + 1) = Poly(ginv->at(i, j));
    }
    return m;
}

GradedMatrix GroupElement::g3_matrix() const {
    GradedMatrix m(cr_target(), cr_target());
    m.at(0, 0) = Poly(beta);
    m.at(1, 0) = u3;
    m.at(1, 1) = Poly(gamma);
    return m;
}

GradedMatrix GroupElement::g3_inverse() const {
    GradedMatrix m(cr_target(), cr_target());
    m.at(0, 0) = Poly(Rational(1) / beta);
    m.at(1, 0) = u3 * (Rational(-1) / (beta * gamma));
    m.at(1, 1) = Poly(Rational(1) / gamma);
    return m;
}

PairBA GroupElement::apply(const PairBA& p) const {
    validate();
    GradedMatrix b = mul_left(g1, cubics::compose(p.B, g2_inverse()));
    GradedMatrix a = cubics::compose(cubics::compose(g2_matrix(), p.A), g3_inverse());
    return PairBA(std::move(b), std::move(a));
}

GroupElement GroupElement::compose(const GroupElement& h) const {
    GroupElement r;
    r.g1 = g1 * h.g1;
    r.alpha = alpha * h.alpha;
    r.g = g * h.g;
    // block product [[a,0],[u,g]] * [[a',0],[u',g']] = [[aa',0],[u a' + g u', g g']]
    for (int i = 0; i < 3; ++i) {
        Poly acc = u2[i] * h.alpha;
        for (int k = 0; k < 3; ++k) acc += h.u2[k] * g.at(i, k);
        r.u2[i] = acc;
    }
    r.beta = beta * h.beta;
    r.gamma = gamma * h.gamma;
    r.u3 = u3 * h.beta + h.u3 * gamma;
    return r;
}

LieTriple LieTriple::zero() {
    LieTriple l;
    l.R = QMatrix(2, 2);
    l.alpha = 0;
    l.S = QMatrix(3, 3);
    l.beta = 0;
    l.gamma = 0;
    return l;
}

GradedMatrix LieTriple::s_matrix() const {
    GradedMatrix m(cr_middle(), cr_middle());
    m.at(0, 0) = Poly(alpha);
    for (int i = 0; i < 3; ++i) {
        m.at(i + 1, 0) = u2[i];
        for (int j = 0; j < 3; ++j) m.at(i + 1, j + 1) = Poly(S.at(i, j));
    }
    return m;
}

GradedMatrix LieTriple::t_matrix() const {
    GradedMatrix m(cr_target(), cr_target());
    m.at(0, 0) = Poly(beta);
    m.at(1, 0) = u3;
    m.at(1, 1) = Poly(gamma);
    return m;
}

LieTriple lie_from_coords(const std::vector<Rational>& v) {
    if (static_cast<int>(v.size()) != kLieDim) throw error("lie_from_coords: need 32 coordinates");
    LieTriple l = LieTriple::zero();
    int k = 0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) l.R.at(i, j) = v[k++];
    l.alpha = v[k++];
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) l.S.at(i, j) = v[k++];
    for (int i = 0; i < 3; ++i) {
        std::array<Rational, 4> c;
        for (int j = 0; j < 4; ++j) c[j] = v[k++];
        l.u2[i] = linear_from(c);
    }
    l.beta = v[k++];
    l.gamma = v[k++];
    {
        std::array<Rational, 4> c;
        for (int j = 0; j < 4; ++j) c[j] = v[k++];
        l.u3 = linear_from(c);
    }
    return l;
}

std::vector<Rational> lie_to_coords(const LieTriple& l) {
    std::vector<Rational> v;
    v.reserve(kLieDim);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) v.push_back(l.R.at(i, j));
    v.push_back(l.alpha);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) v.push_back(l.S.at(i, j));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 4; ++j) v.push_back(l.u2[i].coeff(Monomial::var(j)));
    v.push_back(l.beta);
    v.push_back(l.gamma);
    for (int j = 0; j < 4; ++j) v.push_back(l.u3.coeff(Monomial::var(j)));
    return v;
}

}  // namespace cubics
