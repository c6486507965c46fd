#ifndef CUBICS_QMATRIX_HPP
#define CUBICS_QMATRIX_HPP

#include <optional>
#include <vector>

#include "cubics/rational.hpp"

namespace cubics {

/// Dense matrix over the rationals with exact rank/kernel/solve.
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, Rational(0)) {}

    static QMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Rational& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

    QMatrix operator*(const QMatrix& o) const;
    QMatrix transpose() const;
    bool operator==(const QMatrix& o) const = default;

    bool is_zero() const;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Rational> a_;
};

struct RankKernel {
    long rank = 0;
    /// Basis of { v : M v = 0 }, one primitive integer vector per free
    /// column, first nonzero entry positive.
    std::vector<std::vector<Rational>> kernel;
};

/// Exact rank and kernel by fraction-free (Bareiss) elimination on the
/// integer matrix obtained after clearing row denominators.
RankKernel rank_and_kernel(const QMatrix& m);

long rank_of(const QMatrix& m);

/// One solution of M x = rhs, if the system is consistent.
std::optional<std::vector<Rational>> solve(const QMatrix& m, const std::vector<Rational>& rhs);

/// Inverse of a square matrix; nullopt when singular.
std::optional<QMatrix> inverse(const QMatrix& m);

Rational det(const QMatrix& m);

}  // namespace cubics

#endif
