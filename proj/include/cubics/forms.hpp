#ifndef CUBICS_FORMS_HPP
#define CUBICS_FORMS_HPP

#include <vector>

#include "cubics/poly.hpp"
#include "cubics/qmatrix.hpp"

namespace cubics {

/// Coefficient row of a t-free form over the degree-d monomial basis.
/// Throws if the polynomial has terms outside that degree.
std::vector<Rational> coeff_vector(const Poly& p, int degree);

/// Stack coefficient rows of same-degree forms.
QMatrix coeff_matrix(const std::vector<Poly>& polys, int degree);

/// Dimension of the span of homogeneous degree-d forms.
long span_dimension(const std::vector<Poly>& polys, int degree);

/// Dimension of the span of linear forms; errors on non-linear input.
long wedge_rank(const std::vector<Poly>& forms);

/// Exact evaluation, [OP] eval_at.
Rational eval_at(const Poly& p, const std::array<Rational, 4>& point);

/// Degree-d graded piece of the ideal generated by homogeneous gens:
/// monomial multiples of each generator landing in degree d.
std::vector<Poly> ideal_graded_piece(const std::vector<Poly>& gens, int d);

/// Same span of the ideals generated by two homogeneous families, checked
/// degree by degree through degree dmax (mutual containment by rank).
bool ideals_agree_through_degree(const std::vector<Poly>& a, const std::vector<Poly>& b, int dmax);

/// The unique point of P^3 cut out by three independent linear forms,
/// as a primitive integer vector.
std::array<Rational, 4> point_from_three_forms(const Poly& f1, const Poly& f2, const Poly& f3);

}  // namespace cubics

#endif
