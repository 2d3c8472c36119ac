#pragma once

#include "symrep/intpoly.hpp"

namespace symrep {

/// Lagrange decomposition target = a^2 + b^2 + c^2 + d^2 with the canonical
/// ordering a >= b >= c >= d >= 0.
struct FourSquare {
    Int target;
    Int a, b, c, d;

    bool valid() const { return a * a + b * b + c * c + d * d == target && a >= b && b >= c && c >= d && d >= 0; }
};

/// Deterministic four-square decomposition of n >= 0.
FourSquare decompose(const Int& n);

}  // namespace symrep
