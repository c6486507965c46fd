#include "cubics/nets.hpp"

#include <algorithm>

namespace cubics {

void NetQ::validate() const {
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 3; ++j) {
            const Poly& p = at(i, j);
            if (!p.is_zero() && (!p.is_x_homogeneous(1) || p.has_t()))
                throw error("NetQ: entry is not a linear form");
        }
}

std::array<Poly, 3> net_minors(const NetQ& q) {
    auto minor = [&](int c1, int c2) { return q.at(0, c1) * q.at(1, c2) - q.at(0, c2) * q.at(1, c1); };
    return {minor(0, 1), minor(0, 2), minor(1, 2)};
}

namespace {

// binary quadratic a*L1^2 + b*L1*L2 + c*L2^2
using BinForm = std::array<Rational, 3>;

std::string binform_str(const BinForm& f) {
    Poly p;  // printed via x0, x1 standing for L1, L2
    p += Poly(f[0], Monomial{{2, 0, 0, 0, 0}});
    p += Poly(f[1], Monomial{{1, 1, 0, 0, 0}});
    p += Poly(f[2], Monomial{{0, 2, 0, 0, 0}});
    std::string s = p.str();
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s.compare(i, 2, "x0") == 0) {
            out += "L1";
            ++i;
        } else if (s.compare(i, 2, "x1") == 0) {
            out += "L2";
            ++i;
        } else {
            out += s[i];
        }
    }
    return out;
}

// gcd of univariate rational polynomials (low-degree Euclid), coefficients
// indexed by ascending power
std::vector<Rational> poly_gcd(std::vector<Rational> a, std::vector<Rational> b) {
    auto trim = [](std::vector<Rational>& p) {
        while (!p.empty() && p.back() == 0) p.pop_back();
    };
    trim(a);
    trim(b);
    while (!b.empty()) {
        // a mod b
        while (a.size() >= b.size() && !a.empty()) {
            Rational f = a.back() / b.back();
            std::size_t off = a.size() - b.size();
            for (std::size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
            trim(a);
            if (a.size() < b.size()) break;
        }
        std::swap(a, b);
        trim(b);
    }
    if (!a.empty()) {
        Rational lead = a.back();
        for (auto& c : a) c /= lead;
    }
    return a;
}

bool is_rational_square(const Rational& r, Rational* root) {
    if (r < 0) return false;
    if (r == 0) {
        *root = 0;
        return true;
    }
    Integer num = r.get_num(), den = r.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return false;
    Integer sn, sd;
    mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
    *root = Rational(sn) / Rational(sd);
    return true;
}

Poly derivative(const Poly& p, int var) {
    Poly d;
    for (const auto& [m, c] : p.terms()) {
        if (m.exps[var] == 0) continue;
        Monomial mm = m;
        mm.exps[var] -= 1;
        d += Poly(c * Rational(m.exps[var]), mm);
    }
    return d;
}

void normalize_linear(Poly& l) {
    for (const auto& [m, c] : l.terms()) {
        l = l * (Rational(1) / c);
        break;
    }
    // clear denominators to a primitive integer form
    Integer den(1);
    for (const auto& [m, c] : l.terms()) den = lcm(den, c.get_den());
    l = l * Rational(den);
    Integer g(0);
    for (const auto& [m, c] : l.terms()) g = gcd(g, c.get_num());
    if (g != 0) l = l * Rational(Integer(1), g);
}

}  // namespace

NetStabilityResult net_is_stable(const NetQ& q) {
    q.validate();
    NetStabilityResult res;

    // (a) a vanishing column combination: kernel of the 8x3 coefficient block
    QMatrix cols(8, 3);
    for (int j = 0; j < 3; ++j)
        for (int i = 0; i < 2; ++i)
            for (int v = 0; v < 4; ++v) cols.at(i * 4 + v, j) = q.at(i, j).coeff(Monomial::var(v));
    if (rank_of(cols) < 3) {
        res.stable = Tri::False;
        res.detail = "a column combination vanishes";
        return res;
    }

    // (b) a row combination L1*row1 + L2*row2 whose three entries span at
    // most a line: all 2x2 minors of the 3x4 coefficient matrix vanish
    std::vector<BinForm> minors;
    auto coeff = [&](int entry, int var, int rowsel) {
        return q.at(rowsel, entry).coeff(Monomial::var(var));
    };
    for (int e1 = 0; e1 < 3; ++e1)
        for (int e2 = e1 + 1; e2 < 3; ++e2)
            for (int v1 = 0; v1 < 4; ++v1)
                for (int v2 = v1 + 1; v2 < 4; ++v2) {
                    // rows of the 3x4 matrix are linear in (L1, L2):
                    // entry e, var v has coefficient L1*c0[e][v] + L2*c1[e][v]
                    Rational a = coeff(e1, v1, 0) * coeff(e2, v2, 0) - coeff(e1, v2, 0) * coeff(e2, v1, 0);
                    Rational b = coeff(e1, v1, 0) * coeff(e2, v2, 1) + coeff(e1, v1, 1) * coeff(e2, v2, 0) -
                                 coeff(e1, v2, 0) * coeff(e2, v1, 1) - coeff(e1, v2, 1) * coeff(e2, v1, 0);
                    Rational c = coeff(e1, v1, 1) * coeff(e2, v2, 1) - coeff(e1, v2, 1) * coeff(e2, v1, 1);
                    if (a != 0 || b != 0 || c != 0) minors.push_back({a, b, c});
                }

    if (minors.empty()) {
        res.stable = Tri::False;
        res.detail = "every row combination has entries spanning at most a line";
        return res;
    }

    // common root at (1:0)?
    bool at_infinity = std::all_of(minors.begin(), minors.end(), [](const BinForm& f) { return f[0] == 0; });
    if (at_infinity) {
        res.stable = Tri::False;
        res.detail = "row 1 has entries spanning at most a line";
        return res;
    }

    // finite common roots: gcd of the dehomogenized forms
    std::vector<Rational> g;
    bool first = true;
    for (const auto& f : minors) {
        std::vector<Rational> p{f[2], f[1], f[0]};  // c + b x + a x^2, x = L1/L2
        g = first ? p : poly_gcd(g, p);
        first = false;
        while (!g.empty() && g.back() == 0) g.pop_back();
        if (g.size() <= 1) break;  // constant gcd, no common root
    }
    if (g.size() <= 1) {
        res.stable = Tri::True;
        return res;
    }
    if (g.size() == 2) {
        // linear gcd: rational root
        res.stable = Tri::False;
        res.detail = "destabilizing row combination at L1/L2 = " + to_string(-g[0] / g[1]);
        return res;
    }
    // quadratic gcd: rational roots iff the discriminant is a square
    Rational disc = g[1] * g[1] - 4 * g[2] * g[0];
    Rational root;
    if (is_rational_square(disc, &root)) {
        res.stable = Tri::False;
        res.detail = "destabilizing row combination at L1/L2 = " + to_string((-g[1] + root) / (2 * g[2]));
        return res;
    }
    res.stable = Tri::Inconclusive;
    res.offending_binary_form = binform_str({g[2], g[1], g[0]});
    return res;
}

QuadricFactors factor_quadric(const Poly& q) {
    if (q.is_zero() || !q.is_x_homogeneous(2) || q.has_t())
        throw error("factor_quadric: input must be a nonzero quadric");
    QuadricFactors out;

    QMatrix gram(4, 4);
    for (int i = 0; i < 4; ++i) {
        Monomial sq;
        sq.exps[i] = 2;
        gram.at(i, i) = q.coeff(sq);
        for (int j = i + 1; j < 4; ++j) {
            Monomial mm;
            mm.exps[i] = 1;
            mm.exps[j] = 1;
            Rational half = q.coeff(mm) / 2;
            gram.at(i, j) = half;
            gram.at(j, i) = half;
        }
    }
    long r = rank_of(gram);
    if (r >= 3) {
        out.status = Tri::False;
        return out;
    }

    // rational diagonalization q = d1*y1^2 + d2*y2^2 by completing squares
    Poly rem = q;
    std::vector<std::pair<Rational, Poly>> diag;
    while (!rem.is_zero()) {
        int sqvar = -1;
        for (int i = 0; i < 4 && sqvar < 0; ++i) {
            Monomial sq;
            sq.exps[i] = 2;
            if (rem.coeff(sq) != 0) sqvar = i;
        }
        if (sqvar < 0) {
            // pure cross terms: shear x_i -> x_i + x_j to expose a square
            int vi = -1, vj = -1;
            for (const auto& [m, c] : rem.terms()) {
                for (int i = 0; i < 4; ++i)
                    if (m.exps[i] == 1)
                        for (int j = i + 1; j < 4; ++j)
                            if (m.exps[j] == 1) {
                                vi = i;
                                vj = j;
                            }
                if (vi >= 0) break;
            }
            std::vector<Poly> fwd;
            for (int v = 0; v < 4; ++v) fwd.push_back(Poly::variable(v));
            fwd[vi] = Poly::variable(vi) + Poly::variable(vj);
            Poly sheared = rem.substitute(fwd);
            // diagonalize the sheared remainder, then undo the shear
            Poly back_rem = sheared;
            std::vector<Poly> bwd;
            for (int v = 0; v < 4; ++v) bwd.push_back(Poly::variable(v));
            bwd[vi] = Poly::variable(vi) - Poly::variable(vj);
            // one square now exists at vj
            Monomial sq;
            sq.exps[vj] = 2;
            Rational c = sheared.coeff(sq);
            Poly l = derivative(sheared, vj) * Rational(1, 2) * (Rational(1) / c);
            diag.emplace_back(c, l.substitute(bwd));
            rem = (sheared - l * l * c).substitute(bwd);
            continue;
        }
        Monomial sq;
        sq.exps[sqvar] = 2;
        Rational c = rem.coeff(sq);
        Poly l = derivative(rem, sqvar) * Rational(1, 2) * (Rational(1) / c);
        diag.emplace_back(c, l);
        rem -= l * l * c;
    }

    if (diag.size() == 1) {
        Poly w = diag[0].second;
        normalize_linear(w);
        out.status = Tri::True;
        out.factors = {w, w};
        return out;
    }
    if (diag.size() != 2) throw error("factor_quadric: diagonalization disagrees with the Gram rank");
    // q = d1 y1^2 + d2 y2^2 splits over Q iff -d2/d1 is a rational square
    Rational ratio = -diag[1].first / diag[0].first;
    Rational s;
    if (!is_rational_square(ratio, &s)) {
        out.status = Tri::Inconclusive;
        return out;
    }
    Poly w1 = diag[0].second - diag[1].second * s;
    Poly w2 = diag[0].second + diag[1].second * s;
    normalize_linear(w1);
    normalize_linear(w2);
    out.status = Tri::True;
    out.factors = {w1, w2};
    return out;
}

NetN1Result net_in_n1(const NetQ& q) {
    auto st = net_is_stable(q);
    if (st.stable != Tri::True) throw error("net_in_n1: net is not (provably) stable");
    auto minors = net_minors(q);
    const Poly* pivot = nullptr;
    for (const auto& m : minors)
        if (!m.is_zero()) {
            pivot = &m;
            break;
        }
    if (!pivot) throw error("net_in_n1: all minors vanish on a stable net");

    NetN1Result res;
    auto fac = factor_quadric(*pivot);
    if (fac.status == Tri::False) {
        res.in_n1 = Tri::False;
        return res;
    }
    if (fac.status == Tri::Inconclusive) {
        res.in_n1 = Tri::Inconclusive;
        res.offending_quadric = *pivot;
        return res;
    }
    for (const auto& w : fac.factors) {
        bool divides_all = true;
        for (const auto& m : minors) {
            if (m.is_zero()) continue;
            if (!m.divide_by_linear(w)) {
                divides_all = false;
                break;
            }
        }
        if (divides_all) {
            res.in_n1 = Tri::True;
            res.w = w;
            return res;
        }
    }
    res.in_n1 = Tri::False;
    return res;
}

NetQ rho_map(const PairBA& p) {
    if (!is_pair_stable(p)) throw error("rho_map: unstable pair");
    NetQ q;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 3; ++j) q.at(i, j) = p.B.at(i, j + 1);
    q.validate();
    if (net_is_stable(q).stable != Tri::True)
        throw error("rho_map: extracted net is not stable (non-exact input?)");
    return q;
}

TauResult tau_map(const PlanarData& pd) {
    if (pd.q1.eval(pd.point) != 0 || pd.q2.eval(pd.point) != 0)
        throw error("tau_map: pair is not singular planar");

    // complete (l1, l2, w) by the first coordinate form that gives a basis
    Poly m;
    for (int v = 0; v < 4; ++v) {
        Poly cand = Poly::variable(v);
        if (wedge_rank({pd.l1, pd.l2, pd.w, cand}) == 4) {
            m = cand;
            break;
        }
    }
    QMatrix c = coeff_matrix({pd.l1, pd.l2, pd.w, m}, 1);
    auto cinv = inverse(c);
    if (!cinv) throw error("tau_map: degenerate basis");

    // y-coordinates: x = C^-1 y, so q~(y) = q(C^-1 y)
    std::vector<Poly> to_y;
    for (int i = 0; i < 4; ++i) {
        Poly img;
        for (int j = 0; j < 4; ++j)
            if (cinv->at(i, j) != 0) img += Poly(cinv->at(i, j), Monomial::var(j));
        to_y.push_back(img);
    }
    std::vector<Poly> to_x{pd.l1, pd.l2, pd.w, m};

    TauResult out;
    auto solve_one = [&](const Poly& q, int which) {
        Poly qt = q.substitute(to_y);
        auto cf = [&](int i, int j) {
            Monomial mm;
            mm.exps[i] += 1;
            mm.exps[j] += 1;
            return qt.coeff(mm);
        };
        if (cf(2, 2) != 0 || cf(2, 3) != 0 || cf(3, 3) != 0)
            throw error("tau_map: quadric is not contained in (l1, l2)");
        // q~ = a~*y0 + b~*y1; the pinning zeroes b~'s y0 coefficient, so the
        // cross term y0*y1 goes entirely to a~
        Poly at = Poly(cf(0, 0), Monomial::var(0)) + Poly(cf(0, 1), Monomial::var(1)) +
                  Poly(cf(0, 2), Monomial::var(2)) + Poly(cf(0, 3), Monomial::var(3));
        Poly bt = Poly(cf(1, 1), Monomial::var(1)) + Poly(cf(1, 2), Monomial::var(2)) +
                  Poly(cf(1, 3), Monomial::var(3));
        Poly a = at.substitute(to_x), b = bt.substitute(to_x);
        if (!(a * pd.l1 + b * pd.l2 == q)) throw error("tau_map: solve verification failed");
        // raw ambiguity (a, b) -> (a + c*l2, b - c*l1): dimension of the
        // kernel of (a, b) -> a*l1 + b*l2 on linear forms
        QMatrix sys(10, 8);
        const auto& basis2 = monomials_of_degree(2);
        for (int v = 0; v < 4; ++v) {
            Poly col_a = Poly::variable(v) * pd.l1;
            Poly col_b = Poly::variable(v) * pd.l2;
            auto va = coeff_vector(col_a, 2), vb = coeff_vector(col_b, 2);
            for (std::size_t r = 0; r < basis2.size(); ++r) {
                sys.at(static_cast<int>(r), v) = va[r];
                sys.at(static_cast<int>(r), 4 + v) = vb[r];
            }
        }
        out.raw_solution_dims[which] = static_cast<long>(rank_and_kernel(sys).kernel.size());
        return std::pair{a, b};
    };
    auto [a1, b1] = solve_one(pd.q1, 0);
    auto [a2, b2] = solve_one(pd.q2, 1);
    out.net.at(0, 0) = Poly();
    out.net.at(0, 1) = a1;
    out.net.at(0, 2) = b1;
    out.net.at(1, 0) = Poly();
    out.net.at(1, 1) = a2;
    out.net.at(1, 2) = b2;
    return out;
}

}  // namespace cubics
