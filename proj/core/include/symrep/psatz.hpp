#pragma once

#include <utility>

#include "symrep/intmatrix.hpp"

namespace symrep {

/// Sum-of-squares witness for a positive definite symmetric integer matrix b:
/// s * b = I_n + q^t * q with s >= 1 and at most 8n rows in q.
struct PsatzCertificate {
    SymIntMatrix b;
    Int s;
    IntMatrix q;  // m x n
    int m = 0;

    bool identity_holds() const;
};

/// Smallest positive integer t such that t*b - I_n is positive semidefinite.
Int find_scale(const SymIntMatrix& b);

/// Fraction-free symmetric rank-one peeling of a positive semidefinite n:
/// returns (S, q) with S >= 1, S * n = q^t * q and at most 4*size rows.
std::pair<Int, IntMatrix> peel_gram(const SymIntMatrix& n);

/// Full certificate: t = find_scale(b), (S, q0) = peel_gram(t*b - I),
/// the leftover (S-1)*I absorbed through four-square digits, s = S*t.
PsatzCertificate certify(const SymIntMatrix& b);

}  // namespace symrep
