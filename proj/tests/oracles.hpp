#ifndef CUBICS_TESTS_ORACLES_HPP
#define CUBICS_TESTS_ORACLES_HPP

#include <random>

#include "cubics/poly.hpp"
#include "cubics/qmatrix.hpp"

namespace cubics::testing {

// Naive rational Gaussian elimination; the independent oracle for every
// rank asserted by the library's fraction-free route.
inline long naive_rank(QMatrix m) {
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int piv = -1;
        for (int r = row; r < m.rows(); ++r)
            if (m.at(r, col) != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        for (int c = 0; c < m.cols(); ++c) std::swap(m.at(piv, c), m.at(row, c));
        for (int r = row + 1; r < m.rows(); ++r) {
            if (m.at(r, col) == 0) continue;
            Rational f = m.at(r, col) / m.at(row, col);
            for (int c = col; c < m.cols(); ++c) m.at(r, c) -= f * m.at(row, c);
        }
        ++row;
    }
    return row;
}

inline Poly random_form(std::mt19937& rng, int degree, int lo = -3, int hi = 3) {
    std::uniform_int_distribution<int> coeff(lo, hi);
    Poly p;
    for (const auto& m : monomials_of_degree(degree)) {
        int c = coeff(rng);
        if (c != 0) p += Poly(Rational(c), m);
    }
    return p;
}

}  // namespace cubics::testing

#endif
