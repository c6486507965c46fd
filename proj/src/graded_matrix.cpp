#include "cubics/graded_matrix.hpp"

namespace cubics {

GradedMatrix::GradedMatrix(TwistList source, TwistList target)
    : source_(std::move(source)), target_(std::move(target)) {
    if (source_.empty() || target_.empty()) throw error("GradedMatrix: empty twist list");
    e_.assign(source_.size() * target_.size(), Poly());
}

void GradedMatrix::validate() const {
    for (int i = 0; i < rows(); ++i)
        for (int j = 0; j < cols(); ++j) {
            const Poly& p = at(i, j);
            if (p.is_zero()) continue;
            int d = entry_degree(i, j);
            if (d < 0 || !p.is_x_homogeneous(d))
                throw error("GradedMatrix: entry (" + std::to_string(i) + "," + std::to_string(j) +
                            ") is not homogeneous of degree " + std::to_string(d));
        }
}

bool GradedMatrix::is_zero() const {
    for (const auto& p : e_)
        if (!p.is_zero()) return false;
    return true;
}

bool GradedMatrix::has_t() const {
    for (const auto& p : e_)
        if (p.has_t()) return true;
    return false;
}

GradedMatrix GradedMatrix::specialize_t(const Rational& t0) const {
    GradedMatrix r(source_, target_);
    for (int i = 0; i < rows(); ++i)
        for (int j = 0; j < cols(); ++j) r.at(i, j) = at(i, j).specialize_t(t0);
    return r;
}

GradedMatrix GradedMatrix::operator+(const GradedMatrix& o) const {
    if (source_ != o.source_ || target_ != o.target_) throw error("GradedMatrix sum: shape mismatch");
    GradedMatrix r(source_, target_);
    for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] + o.e_[k];
    return r;
}

GradedMatrix GradedMatrix::operator*(const Rational& c) const {
    GradedMatrix r(source_, target_);
    for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] * c;
    return r;
}

GradedMatrix compose(const GradedMatrix& b, const GradedMatrix& a) {
    if (b.target() != a.source()) throw error("compose: B.target != A.source");
    b.validate();
    a.validate();
    GradedMatrix r(b.source(), a.target());
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            Poly acc;
            for (int k = 0; k < b.cols(); ++k) acc += b.at(i, k) * a.at(k, j);
            r.at(i, j) = std::move(acc);
        }
    return r;
}

GradedMatrix mul_left(const QMatrix& g, const GradedMatrix& m) {
    if (g.cols() != m.rows()) throw error("mul_left: shape mismatch");
    // row mixing by scalars is degree-consistent only for a uniform source
    for (int tw : m.source())
        if (tw != m.source()[0]) throw error("mul_left: non-uniform source twists");
    TwistList src(g.rows(), m.source()[0]);
    GradedMatrix r(src, m.target());
    for (int i = 0; i < g.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            Poly acc;
            for (int k = 0; k < m.rows(); ++k) acc += m.at(k, j) * g.at(i, k);
            r.at(i, j) = std::move(acc);
        }
    return r;
}

GradedMatrix mul_right(const GradedMatrix& m, const QMatrix& g) {
    if (m.cols() != g.rows()) throw error("mul_right: shape mismatch");
    for (int tw : m.target())
        if (tw != m.target()[0]) throw error("mul_right: non-uniform target twists");
    TwistList tgt(g.cols(), m.target()[0]);
    GradedMatrix r(m.source(), tgt);
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < g.cols(); ++j) {
            Poly acc;
            for (int k = 0; k < m.cols(); ++k) acc += m.at(i, k) * g.at(k, j);
            r.at(i, j) = std::move(acc);
        }
    return r;
}

long sections_dim(const TwistList& twists, int m) {
    long dim = 0;
    for (int tw : twists)
        if (m + tw >= 0) dim += graded_dim(m + tw);
    return dim;
}

QMatrix sections_matrix(const GradedMatrix& phi, int m) {
    if (phi.has_t()) throw error("sections_matrix: parametric entries; specialize t first");
    phi.validate();
    long rows = sections_dim(phi.source(), m);
    long cols = sections_dim(phi.target(), m);
    QMatrix out(static_cast<int>(rows), static_cast<int>(cols));

    std::vector<long> row_off(phi.rows() + 1, 0), col_off(phi.cols() + 1, 0);
    for (int i = 0; i < phi.rows(); ++i) {
        int d = m + phi.source()[i];
        row_off[i + 1] = row_off[i] + (d >= 0 ? graded_dim(d) : 0);
    }
    for (int j = 0; j < phi.cols(); ++j) {
        int d = m + phi.target()[j];
        col_off[j + 1] = col_off[j] + (d >= 0 ? graded_dim(d) : 0);
    }

    for (int i = 0; i < phi.rows(); ++i) {
        int ds = m + phi.source()[i];
        if (ds < 0) continue;
        const auto& smonos = monomials_of_degree(ds);
        for (int j = 0; j < phi.cols(); ++j) {
            int dt = m + phi.target()[j];
            if (dt < 0) continue;
            const Poly& entry = phi.at(i, j);
            if (entry.is_zero()) continue;
            for (std::size_t r = 0; r < smonos.size(); ++r) {
                Poly prod = entry * Poly(Rational(1), smonos[r]);
                auto vec = coeff_vector(prod, dt);
                for (std::size_t c = 0; c < vec.size(); ++c)
                    if (vec[c] != 0) out.at(static_cast<int>(row_off[i] + r), static_cast<int>(col_off[j] + c)) = vec[c];
            }
        }
    }
    return out;
}

}  // namespace cubics
