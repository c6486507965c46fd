#include "cubics/qmatrix.hpp"

#include <algorithm>

namespace cubics {

QMatrix QMatrix::identity(int n) {
    QMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

QMatrix QMatrix::operator*(const QMatrix& o) const {
    if (cols_ != o.rows_) throw error("QMatrix product: shape mismatch");
    QMatrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rational& v = at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < o.cols_; ++j) {
                const Rational& w = o.at(k, j);
                if (w != 0) r.at(i, j) += v * w;
            }
        }
    return r;
}

QMatrix QMatrix::transpose() const {
    QMatrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

bool QMatrix::is_zero() const {
    for (const auto& v : a_)
        if (v != 0) return false;
    return true;
}

namespace {

struct Echelon {
    std::vector<std::vector<Integer>> m;  // row echelon, integer entries
    std::vector<int> pivot_cols;          // one per echelon row, increasing
};

// Fraction-free elimination. Pivots are chosen as the smallest nonzero
// magnitude in the eligible block, which keeps the Bareiss minors small on
// the sparse section matrices this library produces.
Echelon bareiss(const QMatrix& q) {
    int rows = q.rows(), cols = q.cols();
    std::vector<std::vector<Integer>> m(rows, std::vector<Integer>(cols));
    for (int i = 0; i < rows; ++i) {
        Integer den(1);
        for (int j = 0; j < cols; ++j) den = lcm(den, q.at(i, j).get_den());
        for (int j = 0; j < cols; ++j) {
            Rational v = q.at(i, j) * Rational(den);
            m[i][j] = v.get_num();
        }
    }

    Echelon ech;
    Integer prev(1);
    int row = 0;
    for (int col = 0; col < cols && row < rows; ++col) {
        int best = -1;
        for (int r = row; r < rows; ++r) {
            if (m[r][col] == 0) continue;
            if (best < 0 || mpz_cmpabs(m[r][col].get_mpz_t(), m[best][col].get_mpz_t()) < 0) best = r;
        }
        if (best < 0) continue;
        std::swap(m[row], m[best]);
        const Integer& p = m[row][col];
        for (int r = row + 1; r < rows; ++r) {
            for (int c = col + 1; c < cols; ++c) {
                Integer v = p * m[r][c] - m[r][col] * m[row][c];
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                m[r][c] = v;
            }
            m[r][col] = 0;
        }
        prev = p;
        ech.pivot_cols.push_back(col);
        ++row;
    }
    m.resize(row);
    ech.m = std::move(m);
    return ech;
}

std::vector<Rational> back_substitute(const Echelon& ech, int cols, int free_col) {
    std::vector<Rational> v(cols, Rational(0));
    v[free_col] = 1;
    for (int i = static_cast<int>(ech.pivot_cols.size()) - 1; i >= 0; --i) {
        int pc = ech.pivot_cols[i];
        if (pc > free_col) continue;
        Rational acc(0);
        for (int c = pc + 1; c <= free_col; ++c) {
            if (v[c] != 0 && ech.m[i][c] != 0) acc += Rational(ech.m[i][c]) * v[c];
        }
        v[pc] = -acc / Rational(ech.m[i][pc]);
    }
    return v;
}

void make_primitive(std::vector<Rational>& v) {
    Integer den(1);
    for (const auto& x : v) den = lcm(den, x.get_den());
    Integer g(0);
    for (auto& x : v) {
        x *= Rational(den);
        g = gcd(g, x.get_num());
    }
    if (g == 0) return;
    int sign = 0;
    for (auto& x : v) {
        x /= Rational(g);
        if (sign == 0 && x != 0) sign = sgn(x.get_num()) > 0 ? 1 : -1;
    }
    if (sign < 0)
        for (auto& x : v) x = -x;
}

}  // namespace

RankKernel rank_and_kernel(const QMatrix& m) {
    Echelon ech = bareiss(m);
    RankKernel rk;
    rk.rank = static_cast<long>(ech.pivot_cols.size());
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : ech.pivot_cols) is_pivot[c] = true;
    for (int c = 0; c < m.cols(); ++c) {
        if (is_pivot[c]) continue;
        auto v = back_substitute(ech, m.cols(), c);
        make_primitive(v);
        rk.kernel.push_back(std::move(v));
    }
    return rk;
}

long rank_of(const QMatrix& m) {
    return static_cast<long>(bareiss(m).pivot_cols.size());
}

std::optional<std::vector<Rational>> solve(const QMatrix& m, const std::vector<Rational>& rhs) {
    if (static_cast<int>(rhs.size()) != m.rows()) throw error("solve: rhs size mismatch");
    // kernel of [M | -rhs] with last coordinate 1 gives a solution
    QMatrix aug(m.rows(), m.cols() + 1);
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = -rhs[i];
    }
    Echelon ech = bareiss(aug);
    bool last_is_pivot =
        !ech.pivot_cols.empty() && ech.pivot_cols.back() == m.cols();
    if (last_is_pivot) return std::nullopt;  // inconsistent
    auto v = back_substitute(ech, m.cols() + 1, m.cols());
    std::vector<Rational> x(v.begin(), v.begin() + m.cols());
    return x;
}

std::optional<QMatrix> inverse(const QMatrix& m) {
    if (m.rows() != m.cols()) throw error("inverse: not square");
    int n = m.rows();
    // Gauss-Jordan on [M | I]
    QMatrix aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = 1;
    }
    int row = 0;
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = row; r < n; ++r)
            if (aug.at(r, col) != 0) {
                piv = r;
                break;
            }
        if (piv < 0) return std::nullopt;
        if (piv != row)
            for (int c = 0; c < 2 * n; ++c) std::swap(aug.at(piv, c), aug.at(row, c));
        Rational p = aug.at(row, col);
        for (int c = 0; c < 2 * n; ++c) aug.at(row, c) /= p;
        for (int r = 0; r < n; ++r) {
            if (r == row) continue;
            Rational f = aug.at(r, col);
            if (f == 0) continue;
            for (int c = 0; c < 2 * n; ++c) aug.at(r, c) -= f * aug.at(row, c);
        }
        ++row;
    }
    QMatrix inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
    return inv;
}

Rational det(const QMatrix& m) {
    if (m.rows() != m.cols()) throw error("det: not square");
    int n = m.rows();
    if (n == 0) return Rational(1);
    QMatrix a = m;
    Rational d(1);
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (a.at(r, col) != 0) {
                piv = r;
                break;
            }
        if (piv < 0) return Rational(0);
        if (piv != col) {
            for (int c = 0; c < n; ++c) std::swap(a.at(piv, c), a.at(col, c));
            d = -d;
        }
        d *= a.at(col, col);
        Rational p = a.at(col, col);
        for (int r = col + 1; r < n; ++r) {
            Rational f = a.at(r, col) / p;
            if (f == 0) continue;
            for (int c = col; c < n; ++c) a.at(r, c) -= f * a.at(col, c);
        }
    }
    return d;
}

}  // namespace cubics
