#include "symrep/structured.hpp"

namespace symrep {

CompanionMatrix companion(const IntPoly& f) {
    if (!f.is_monic() || f.degree() < 1) throw NotMonic("companion matrix needs a monic polynomial of degree >= 1");
    int n = f.degree();
    IntMatrix c(n, n);
    for (int j = 0; j + 1 < n; ++j) c.at(j + 1, j) = 1;
    for (int i = 0; i < n; ++i) c.at(i, n - 1) = -f.coeff(i);
    return {n, std::move(c)};
}

BezoutMatrix bezout(const IntPoly& f, const IntPoly& g) {
    if (!f.is_monic() || f.degree() < 1) throw NotMonic("Bezout matrix needs a monic first argument of degree >= 1");
    int n = f.degree();
    if (g.degree() > n - 1)
        throw DegreeTooHigh("second argument must have degree at most " + std::to_string(n - 1));
    // Numerator N(X, Y) = f(Y) g(X) - f(X) g(Y) as a polynomial in Y with
    // coefficients in Z[X]: the Y^k coefficient is f_k g(X) - g_k f(X).
    std::vector<IntPoly> num(static_cast<size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) num[static_cast<size_t>(k)] = g * f.coeff(k) - f * g.coeff(k);
    // Synthetic division by (Y - X): quotient coefficients descend from Y^(n-1).
    std::vector<IntPoly> quot(static_cast<size_t>(n));
    IntPoly carry = num[static_cast<size_t>(n)];
    for (int k = n - 1; k >= 0; --k) {
        quot[static_cast<size_t>(k)] = carry;
        carry = num[static_cast<size_t>(k)] + IntPoly::monomial(1) * carry;
    }
    if (!carry.is_zero()) throw InternalCertificateFailure("Bezoutian division by (Y - X) left a remainder");
    IntMatrix b(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) b.at(i, j) = quot[static_cast<size_t>(i)].coeff(j);
    return {n, SymIntMatrix(std::move(b)), f, g};
}

BezoutMatrix bezout_ffprime(const IntPoly& f) { return bezout(f, derivative(f)); }

}  // namespace symrep
