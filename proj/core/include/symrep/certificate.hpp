#pragma once

#include <vector>

#include "symrep/intmatrix.hpp"
#include "symrep/intpoly.hpp"
#include "symrep/psatz.hpp"
#include "symrep/structured.hpp"

namespace symrep {

/// Outcome of the builder's self-checks.
struct CheckRecord {
    bool symmetric = false;
    bool divides = false;
    bool size_bound = false;
    bool intertwine = false;
    bool similarity = false;

    bool all() const { return symmetric && divides && size_bound && intertwine && similarity; }
};

/// One strict squarefree factor g with its construction data. The final
/// matrix repeats `block` `multiplicity` times along the diagonal.
struct StrictPart {
    IntPoly g;
    int multiplicity = 1;
    CompanionMatrix c;
    BezoutMatrix b;  // B(g, g')
    PsatzCertificate psatz;
    SymIntMatrix block;  // size deg(g) + psatz.m
    // Similarity replay data: q_prime * block = m_prime * q_prime with the
    // unimodular q_prime = [[I, Q^t], [0, I]] and block-triangular m_prime.
    IntMatrix q_prime;
    IntMatrix m_prime;
};

/// A symmetric integer matrix m_matrix of size <= 9 * deg(f) whose
/// characteristic polynomial is divisible by f, together with everything
/// needed to replay the construction.
///
/// m_matrix is stored as a plain IntMatrix so that a corrupted bundle read
/// back from disk can still be verified (and reported on) instead of being
/// rejected at construction; the builder guarantees symmetry and records it
/// in `checks`.
struct EigenCertificate {
    IntPoly f;
    int n = 0;
    std::vector<StrictPart> parts;  // nonempty
    IntMatrix m_matrix;
    int size = 0;
    CheckRecord checks;

    bool is_single_strict() const { return parts.size() == 1 && parts.front().multiplicity == 1; }
    const CompanionMatrix& c() const { return parts.front().c; }
    const BezoutMatrix& b() const { return parts.front().b; }
    const PsatzCertificate& psatz() const { return parts.front().psatz; }
};

/// Construction for strict real zero f (real-rooted and squarefree):
/// with C = companion(f), B = B(f, f'), (s, Q) = certify(B),
/// M = [[C - Q^t*Q*C^t, C*Q^t], [Q*C^t, 0]] of size n + m <= 9n.
/// Every structural identity is checked before returning; a failure is a
/// defect and raises InternalCertificateFailure.
EigenCertificate build_strict(const IntPoly& f);

/// Extension to every real zero f: direct sum over the squarefree
/// decomposition, one strict block per factor repeated by multiplicity.
EigenCertificate build_any(const IntPoly& f);

}  // namespace symrep
