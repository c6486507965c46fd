#ifndef CUBICS_NETS_HPP
#define CUBICS_NETS_HPP

#include "cubics/moduli.hpp"

namespace cubics {

/// 2x3 matrix of linear forms, a point of the space of nets of quadrics.
struct NetQ {
    std::array<std::array<Poly, 3>, 2> m;

    const Poly& at(int i, int j) const { return m[i][j]; }
    Poly& at(int i, int j) { return m[i][j]; }
    void validate() const;
    bool operator==(const NetQ& o) const = default;
};

/// The three 2x2 minors, column pairs (1,2), (1,3), (2,3).
std::array<Poly, 3> net_minors(const NetQ& q);

/// Decisions over the rationals can be definite or blocked on an
/// irrational root; the blocked case is reported, never guessed.
enum class Tri { True, False, Inconclusive };

struct NetStabilityResult {
    Tri stable = Tri::Inconclusive;
    /// set when stable == Inconclusive: the gcd of the row-combination
    /// minors as a binary form in (L1, L2)
    std::string offending_binary_form;
    /// human-readable reason for False results
    std::string detail;
};

/// A net is stable when it is not equivalent to a matrix with two zeros in
/// a row or in a column. Columns: exact kernel test. Rows: the 2x2 minors
/// of the 3x4 coefficient matrix of L1*row1 + L2*row2 are binary quadrics;
/// their gcd decides whether some row combination has entries spanning at
/// most a line of linear forms.
NetStabilityResult net_is_stable(const NetQ& q);

struct NetN1Result {
    Tri in_n1 = Tri::Inconclusive;
    std::optional<Poly> w;      // the common linear factor when in_n1 == True
    std::optional<Poly> offending_quadric;  // when Inconclusive
};

/// Membership in the degenerate locus: all three minors share a linear
/// factor. Candidates come from factoring the first nonzero minor through
/// the rank of its Gram matrix; each candidate is tested by exact division.
/// Pre: net_is_stable(q) is True.
NetN1Result net_in_n1(const NetQ& q);

/// The 2x3 block of degree-1 entries in B's last three columns. The result
/// is checked against net_is_stable; pre: stable exact pair.
NetQ rho_map(const PairBA& p);

struct TauResult {
    NetQ net;
    /// dimension of the raw solution space of q_i = a_i l1 + b_i l2 before
    /// the canonical pinning, per quadric
    std::array<long, 2> raw_solution_dims;
};

/// For a singular planar normal form, solve q_i = a_i l1 + b_i l2 with the
/// pinned representative (b_i carries no l1-component in the completed
/// basis (l1, l2, w, m)) and return ((0,a1,b1),(0,a2,b2)).
/// Errors when the quadrics do not lie in (l1, l2).
TauResult tau_map(const PlanarData& pd);

/// Rational linear factors of a quadric via its symmetric Gram matrix.
/// status False: no linear factor exists at all (Gram rank >= 3);
/// True: factors found; Inconclusive: splitting needs an irrational root.
struct QuadricFactors {
    Tri status = Tri::Inconclusive;
    std::vector<Poly> factors;  // primitive, first nonzero coefficient positive
};

QuadricFactors factor_quadric(const Poly& q);

}  // namespace cubics

#endif
