#pragma once

#include "symrep/intmatrix.hpp"
#include "symrep/intpoly.hpp"

namespace symrep {

/// Representing matrix of multiplication by X on Z[X]/(f) in the basis
/// 1, X, ..., X^(n-1). Column j < n-1 is the unit vector e_{j+1}; the last
/// column holds the negated coefficients of f.
struct CompanionMatrix {
    int n = 0;
    IntMatrix matrix;
};

/// Symmetric matrix (b_{i,j}) of the Bezoutian
/// (f(Y)g(X) - f(X)g(Y)) / (Y - X) = sum b_{i,j} Y^(i-1) X^(j-1);
/// entry b_{i,j} is stored 0-indexed at matrix[i-1][j-1].
struct BezoutMatrix {
    int n = 0;
    SymIntMatrix matrix;
    IntPoly f;
    IntPoly g;
};

CompanionMatrix companion(const IntPoly& f);

/// Bezout matrix of monic f (degree n >= 1) and g with deg g <= n - 1,
/// computed by expanding the bivariate numerator and dividing exactly by
/// (Y - X); the division leaving no remainder is asserted.
BezoutMatrix bezout(const IntPoly& f, const IntPoly& g);

/// B(f, f'); positive definite exactly when f is a strict real zero
/// polynomial.
BezoutMatrix bezout_ffprime(const IntPoly& f);

}  // namespace symrep
