#ifndef CUBICS_POLY_HPP
#define CUBICS_POLY_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cubics/monomial.hpp"
#include "cubics/rational.hpp"

namespace cubics {

/// Exact multivariate polynomial over the rationals. Zero coefficients are
/// never stored; term order is descending graded-lex, so begin() is the
/// leading term.
class Poly {
public:
    using TermMap = std::map<Monomial, Rational, GradedLexBefore>;

    Poly() = default;
    explicit Poly(const Rational& c);
    Poly(const Rational& c, const Monomial& m);

    static Poly variable(int v, int e = 1);
    static Poly constant(long c) { return Poly(Rational(c)); }

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    /// Largest x-degree among terms; -1 for the zero polynomial.
    int x_degree() const;
    int t_degree() const;
    bool has_t() const { return t_degree() > 0; }

    /// True when every term has x-degree d (vacuously true only for d itself
    /// matching; the zero polynomial is homogeneous of every degree).
    bool is_x_homogeneous(int d) const;
    bool is_x_homogeneous() const;

    Rational coeff(const Monomial& m) const;
    void set_coeff(const Monomial& m, const Rational& c);

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Rational& c) const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    bool operator==(const Poly& o) const { return terms_ == o.terms_; }

    /// Exact evaluation at a point of P^3; requires a t-free polynomial.
    Rational eval(const std::array<Rational, 4>& point) const;

    /// Substitute t := t0, leaving a polynomial in x only.
    Poly specialize_t(const Rational& t0) const;

    /// Substitute x_i := images[i] (t is kept fixed unless an image is given
    /// for it). Images must supply every variable that occurs.
    Poly substitute(const std::vector<Poly>& images) const;

    /// Exact quotient q with (*this) == l * q for a linear form l, if one
    /// exists.
    std::optional<Poly> divide_by_linear(const Poly& l) const;

    /// Canonical printing: descending graded-lex, explicit '*', '^' only for
    /// exponents >= 2. parse(str()) is the identity.
    std::string str() const;

private:
    TermMap terms_;
};

inline Poly operator*(const Rational& c, const Poly& p) { return p * c; }

/// Parser for the expression grammar used in files and on the command line:
///   expr := ['-'] term (('+'|'-') term)*
///   term := coeff ('*' factor)* | factor ('*' factor)*
///   factor := var ('^' nat)? ; var := x0|x1|x2|x3|t ; coeff := int ('/' posint)?
/// Whitespace is insignificant. Errors carry the offending position.
Poly parse_poly(const std::string& text);

struct parse_error : error {
    parse_error(const std::string& what, std::size_t position);
    std::size_t position;
};

}  // namespace cubics

#endif
