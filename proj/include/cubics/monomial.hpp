#ifndef CUBICS_MONOMIAL_HPP
#define CUBICS_MONOMIAL_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace cubics {

inline constexpr int kNumVars = 5;  // x0, x1, x2, x3, t
inline constexpr int kNumXVars = 4;
inline constexpr int kTVar = 4;

extern const char* const kVarNames[kNumVars];

/// Power product in x0..x3 and the deformation parameter t.
/// The x-degree (sum of the first four exponents) carries the grading;
/// the t-exponent is tracked separately and stays 0 outside parametric work.
struct Monomial {
    std::array<int, kNumVars> exps{0, 0, 0, 0, 0};

    static Monomial one() { return Monomial{}; }
    static Monomial var(int v, int e = 1);

    int x_degree() const { return exps[0] + exps[1] + exps[2] + exps[3]; }
    int total_degree() const { return x_degree() + exps[kTVar]; }
    int t_degree() const { return exps[kTVar]; }

    Monomial operator*(const Monomial& o) const;
    bool operator==(const Monomial& o) const = default;

    std::string str() const;
};

/// Graded lexicographic with x0 > x1 > x2 > x3 > t: higher total degree
/// first, ties broken by exponent of the earlier variable. Returns true
/// when a comes strictly before b in the canonical (descending) order.
bool graded_lex_before(const Monomial& a, const Monomial& b);

struct GradedLexBefore {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return graded_lex_before(a, b);
    }
};

/// All t-free monomials of x-degree d, in canonical order. This enumeration
/// fixes the coordinate layout of every section matrix and tangent vector.
const std::vector<Monomial>& monomials_of_degree(int d);

/// binomial(d+3, 3), the number of degree-d forms in four variables.
long graded_dim(int d);

}  // namespace cubics

#endif
