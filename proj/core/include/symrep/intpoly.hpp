#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

#include "symrep/errors.hpp"

namespace symrep {

using Int = mpz_class;

/// Dense univariate polynomial over arbitrary-precision integers.
///
/// Coefficients are stored constant term first: coeff(i) multiplies X^i.
/// The representation is kept normalized, i.e. the last stored coefficient
/// is nonzero. The zero polynomial is the empty coefficient sequence and
/// has no degree; operations that need one reject it.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }
    IntPoly(std::initializer_list<long> coeffs);

    static IntPoly zero() { return IntPoly(); }
    static IntPoly constant(Int c);
    /// X^k
    static IntPoly monomial(int k, Int c = 1);

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree of a nonzero polynomial; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
    bool is_constant() const { return coeffs_.size() <= 1; }

    const Int& leading_coefficient() const;
    /// Coefficient of X^i (zero beyond the degree).
    const Int& coeff(int i) const;
    const std::vector<Int>& coeffs() const { return coeffs_; }

    Int evaluate(const Int& x) const;

    IntPoly operator-() const;
    IntPoly operator+(const IntPoly& rhs) const;
    IntPoly operator-(const IntPoly& rhs) const;
    IntPoly operator*(const IntPoly& rhs) const;
    IntPoly operator*(const Int& scalar) const;
    bool operator==(const IntPoly& rhs) const { return coeffs_ == rhs.coeffs_; }
    bool operator!=(const IntPoly& rhs) const { return !(*this == rhs); }

    /// Canonical text form: comma-separated decimal coefficients, constant
    /// term first ("-1,-1,1" is X^2 - X - 1). The zero polynomial prints "0".
    std::string to_string() const;
    /// Human-oriented form like "X^2 - X - 1".
    std::string to_pretty_string() const;
    static IntPoly from_string(const std::string& text);

private:
    void normalize();
    std::vector<Int> coeffs_;
};

struct SquarefreeDecomposition {
    struct Part {
        IntPoly factor;
        int multiplicity;
    };
    std::vector<Part> parts;

    /// Product of factor^multiplicity over all parts.
    IntPoly recombine() const;
};

/// Formal derivative.
IntPoly derivative(const IntPoly& f);

/// Quotient and remainder of f by a monic g of degree >= 1; exact over the
/// integers because the divisor is monic.
std::pair<IntPoly, IntPoly> poly_divrem(const IntPoly& f, const IntPoly& g);

/// Greatest common divisor in Z[X] by a primitive-part subresultant
/// remainder sequence; result is primitive with positive leading
/// coefficient (hence monic for monic inputs).
IntPoly poly_gcd(const IntPoly& f, const IntPoly& g);

/// Resultant of f and g computed by the subresultant algorithm.
Int resultant(const IntPoly& f, const IntPoly& g);

/// Number of distinct real roots, by a Sturm chain with exact integer
/// arithmetic evaluated at -inf and +inf.
int sturm_distinct_real_roots(const IntPoly& f);

/// True iff the monic f has deg(f) distinct real roots (real-rooted and
/// squarefree).
bool is_strict_real_zero(const IntPoly& f);

/// True iff every root of the monic f is real (multiplicities allowed).
bool is_real_zero(const IntPoly& f);

/// Yun's squarefree decomposition of a monic f of degree >= 1.
SquarefreeDecomposition squarefree_decompose(const IntPoly& f);

}  // namespace symrep
