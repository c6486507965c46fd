#ifndef CUBICS_GRADED_MATRIX_HPP
#define CUBICS_GRADED_MATRIX_HPP

#include <vector>

#include "cubics/forms.hpp"
#include "cubics/poly.hpp"
#include "cubics/qmatrix.hpp"

namespace cubics {

using TwistList = std::vector<int>;

/// Matrix of homogeneous forms between twisted free modules. Rows are
/// indexed by the source summands, columns by the target summands; sections
/// act as row vectors from the left, so "B then A" is the product B*A.
/// Entry (i,j) is zero or x-homogeneous of degree target[j] - source[i];
/// a negative required degree forces the zero entry.
class GradedMatrix {
public:
    GradedMatrix() = default;
    GradedMatrix(TwistList source, TwistList target);

    const TwistList& source() const { return source_; }
    const TwistList& target() const { return target_; }
    int rows() const { return static_cast<int>(source_.size()); }
    int cols() const { return static_cast<int>(target_.size()); }
    int entry_degree(int i, int j) const { return target_[j] - source_[i]; }

    Poly& at(int i, int j) { return e_[static_cast<std::size_t>(i) * target_.size() + j]; }
    const Poly& at(int i, int j) const { return e_[static_cast<std::size_t>(i) * target_.size() + j]; }

    /// Degree bookkeeping holds for every entry (t-degree is ignored).
    void validate() const;
    bool is_zero() const;
    bool has_t() const;

    GradedMatrix specialize_t(const Rational& t0) const;
    GradedMatrix operator+(const GradedMatrix& o) const;
    GradedMatrix operator*(const Rational& c) const;
    bool operator==(const GradedMatrix& o) const = default;

private:
    TwistList source_, target_;
    std::vector<Poly> e_;
};

/// Composite of B then A; requires B.target == A.source.
GradedMatrix compose(const GradedMatrix& b, const GradedMatrix& a);

/// Left multiplication by a rational matrix (row mixing) and right
/// multiplication, for group actions on graded matrices.
GradedMatrix mul_left(const QMatrix& g, const GradedMatrix& m);
GradedMatrix mul_right(const GradedMatrix& m, const QMatrix& g);

/// Matrix of the induced map on degree-m global sections. Rows run over the
/// monomial bases of the source summands in degrees m + source[i], columns
/// over the target bases; summands with m + twist < 0 contribute nothing.
QMatrix sections_matrix(const GradedMatrix& phi, int m);

long sections_dim(const TwistList& twists, int m);

}  // namespace cubics

#endif
